mod common;

use cusp_atlas::{
    cbar_squared, cross_check, enumerate_candidates, Attribution, FamilyId, FamilyMatch,
    FamilyParams, SingularityType, Verdict,
};

fn tuples(max_degree: u64, workers: usize) -> Vec<(u64, u64, u64, u64, u64)> {
    let report = enumerate_candidates(max_degree, workers).unwrap();
    report
        .candidates
        .iter()
        .map(|e| {
            let SingularityType::TwoPairs(t) = e.candidate.ntype else {
                panic!("one-pair type enumerated")
            };
            let (p1, q1, p2, q2) = t.as_tuple();
            (
                e.candidate.degree as u64,
                p1 as u64,
                q1 as u64,
                p2 as u64,
                q2 as u64,
            )
        })
        .collect()
}

fn labels(v: &[(SingularityType, u128)]) -> Vec<String> {
    v.iter().map(|(t, d)| format!("{t}/{d}")).collect()
}

#[test]
fn matches_unpruned_loops() {
    for max_degree in [4, 9, 13, 20] {
        assert_eq!(
            tuples(max_degree, 1),
            common::slow_pass_list(max_degree),
            "max_degree {max_degree}"
        );
    }
}

#[test]
fn passes_up_to_degree_10() {
    // produced by the brute-force reference, not by the enumerator
    let expected = vec![
        (6, 2, 3, 2, 5),
        (8, 2, 7, 2, 3),
        (8, 3, 4, 2, 7),
        (9, 2, 3, 3, 8),
        (9, 2, 9, 2, 5),
        (10, 2, 3, 3, 16),
        (10, 4, 5, 2, 9),
    ];
    assert_eq!(tuples(10, 2), expected);
}

#[test]
fn nothing_below_degree_6() {
    for max_degree in 3..=5 {
        let r = enumerate_candidates(max_degree, 1).unwrap();
        assert!(r.candidates.is_empty());
        assert_eq!(r.stats.passes, 0);
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let reference = serde_json::to_string(&enumerate_candidates(35, 1).unwrap()).unwrap();
    for workers in [2, 8] {
        let other = serde_json::to_string(&enumerate_candidates(35, workers).unwrap()).unwrap();
        assert_eq!(reference, other, "workers = {workers}");
    }
}

#[test]
fn every_pass_is_consistent() {
    let r = enumerate_candidates(60, 2).unwrap();
    assert_eq!(r.stats.passes as usize, r.candidates.len());
    assert_eq!(
        r.stats.types_scanned,
        r.stats.degree_genus_rejections + r.stats.sdp_failures + r.stats.passes
    );
    let mut prev = None;
    for e in &r.candidates {
        let c = &e.candidate;
        assert_eq!(c.verdict, Verdict::Pass);
        assert!(c.degree <= 60);
        assert_eq!((c.degree - 1) * (c.degree - 2), 2 * c.delta);
        assert_eq!(cbar_squared(&c.ntype, c.degree), Ok(c.cbar_sq));
        assert_eq!(e.unexpected, e.families.is_empty() && e.exception.is_none());
        let key = (c.degree, c.ntype);
        assert!(prev < Some(key), "not sorted at {}", c.ntype);
        prev = Some(key);
    }
}

#[test]
fn crosscheck_to_20() {
    let diff = cross_check(20, 2).unwrap();
    assert!(diff.missing.is_empty());
    assert!(diff.overlaps.is_empty());
    let got: Vec<_> = diff
        .unexpected
        .iter()
        .map(|c| (c.ntype, c.degree))
        .collect();
    assert_eq!(
        labels(&got),
        [
            "(2,9)(2,5)/9",
            "(3,13)(2,7)/13",
            "(4,17)(2,9)/17",
            "(2,9)(4,9)/18"
        ]
    );
    assert!(!diff.is_empty());
}

#[test]
fn crosscheck_to_55() {
    let r = enumerate_candidates(55, 2).unwrap();
    let diff = cusp_atlas::cross_check_report(&r).unwrap();
    assert!(diff.missing.is_empty());
    let got: Vec<_> = diff
        .unexpected
        .iter()
        .map(|c| (c.ntype, c.degree))
        .collect();
    assert_eq!(
        labels(&got),
        [
            "(2,9)(2,5)/9",
            "(3,13)(2,7)/13",
            "(4,17)(2,9)/17",
            "(2,9)(4,9)/18",
            "(5,21)(2,11)/21",
            "(5,31)(2,3)/25",
            "(6,25)(2,13)/25",
            "(3,13)(4,13)/26",
            "(7,29)(2,15)/29",
            "(8,33)(2,17)/33",
            "(4,17)(4,17)/34",
            "(9,37)(2,19)/37",
            "(3,19)(5,4)/38",
            "(10,41)(2,21)/41",
            "(5,21)(4,21)/42",
            "(9,56)(2,5)/45",
            "(11,45)(2,23)/45",
            "(12,49)(2,25)/49",
            "(6,25)(4,25)/50",
            "(13,53)(2,27)/53",
        ]
    );
    let vii = r
        .candidates
        .iter()
        .find(|e| e.candidate.ntype.to_string() == "(7,48)(3,1)")
        .expect("(7,48)(3,1) missing");
    assert_eq!(vii.candidate.degree, 55);
    assert_eq!(vii.candidate.cbar_sq, -2);
    assert_eq!(
        vii.families,
        vec![FamilyMatch {
            family: FamilyId::VII,
            params: FamilyParams::K { k: 2 }
        }]
    );
}

#[test]
fn exceptions_are_flagged() {
    let r = enumerate_candidates(20, 1).unwrap();
    let notes: Vec<_> = r
        .candidates
        .iter()
        .filter_map(|e| {
            e.exception
                .as_ref()
                .map(|n| (e.candidate.ntype.to_string(), e.candidate.degree, n.clone()))
        })
        .collect();
    assert_eq!(
        notes,
        [
            (
                "(2,7)(4,17)".to_string(),
                17,
                "SS fails at l = 12".to_string()
            ),
            (
                "(2,3)(6,31)".to_string(),
                20,
                "SS fails at l = 13".to_string()
            ),
        ]
    );
    let expected = cusp_atlas::expected_entries(20).unwrap();
    assert!(expected
        .iter()
        .any(|e| matches!(e.attribution, Attribution::Exception { .. })));
}
