//! Table, CSV and JSON renderings. All three carry the same numbers.

use std::fmt::Write as _;

use cusp_atlas::{Attribution, CriterionReport, CrossCheckDiff, SingularityType, Verdict};

use crate::args::OutputFormat;
use crate::document::{
    Body, Document, EnumerationDoc, FamiliesReport, IdentifyReport, InvariantsReport,
};

pub fn render(doc: &Document, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("reports always serialize");
            s.push('\n');
            s
        }
        OutputFormat::Table => table(&doc.body),
        OutputFormat::Csv => csv_text(&doc.body),
    }
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::FailAt(j) => format!("fail at j = {j}"),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn joined<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn exception_cell(families_empty: bool, exception: &Option<String>) -> String {
    match exception {
        Some(note) => note.clone(),
        None if families_empty => "UNEXPECTED".into(),
        None => String::new(),
    }
}

fn table(body: &Body) -> String {
    let mut out = String::new();
    let o = &mut out;
    match body {
        Body::Criterion(r) => criterion_table(o, r),
        Body::Enumeration(doc) => enumeration_table(o, doc),
        Body::Crosscheck(diff) => diff_table(o, diff),
        Body::Invariants(r) => invariants_table(o, r),
        Body::Families(r) => families_table(o, r),
        Body::Identify(r) => identify_table(o, r),
    }
    out.lines().map(|l| format!("{}\n", l.trim_end())).collect()
}

fn criterion_table(o: &mut String, r: &CriterionReport) {
    let _ = writeln!(o, "type     {}", r.ntype);
    let _ = writeln!(o, "degree   {}", r.degree);
    let _ = writeln!(o, "delta    {}", r.delta);
    let _ = writeln!(o, "{:>6} {:>10} {:>10}", "j", "R(jd)", "target");
    for row in &r.rows {
        let mark = if row.r == row.target { "" } else { "  <-" };
        let _ = writeln!(o, "{:>6} {:>10} {:>10}{mark}", row.j, row.r, row.target);
    }
    let _ = writeln!(o, "verdict  {}", verdict_text(r.verdict));
}

fn enumeration_table(o: &mut String, doc: &EnumerationDoc) {
    let r = &doc.report;
    let _ = writeln!(
        o,
        "{:>6}  {:<24} {:>10} {:>8}  {:<24} note",
        "degree", "type", "delta", "cbar_sq", "families"
    );
    for e in &r.candidates {
        let c = &e.candidate;
        let _ = writeln!(
            o,
            "{:>6}  {:<24} {:>10} {:>8}  {:<24} {}",
            c.degree,
            c.ntype.to_string(),
            c.delta,
            c.cbar_sq,
            joined(&e.families, ";"),
            exception_cell(e.families.is_empty(), &e.exception)
        );
    }
    let s = &r.stats;
    let _ = writeln!(o);
    let _ = writeln!(o, "max degree               {}", r.max_degree);
    let _ = writeln!(o, "types scanned            {}", s.types_scanned);
    let _ = writeln!(o, "degree-genus rejections  {}", s.degree_genus_rejections);
    let _ = writeln!(o, "criterion failures       {}", s.sdp_failures);
    let _ = writeln!(o, "passes                   {}", s.passes);
    let _ = writeln!(o);
    diff_table(o, &doc.crosscheck);
}

fn diff_table(o: &mut String, d: &CrossCheckDiff) {
    let _ = writeln!(
        o,
        "crosscheck up to degree {}: {} missing, {} unexpected, {} overlapping",
        d.max_degree,
        d.missing.len(),
        d.unexpected.len(),
        d.overlaps.len()
    );
    for m in &d.missing {
        let _ = writeln!(
            o,
            "  missing     {}/{}  {}",
            m.ntype,
            m.degree,
            attribution_text(&m.attribution)
        );
    }
    for c in &d.unexpected {
        let _ = writeln!(
            o,
            "  unexpected  {}/{}  delta {} cbar_sq {}",
            c.ntype, c.degree, c.delta, c.cbar_sq
        );
    }
    for e in &d.overlaps {
        let c = &e.candidate;
        let _ = writeln!(
            o,
            "  overlap     {}/{}  {}",
            c.ntype,
            c.degree,
            joined(&e.families, ";")
        );
    }
}

fn attribution_text(a: &Attribution) -> String {
    match a {
        Attribution::Family(m) => m.to_string(),
        Attribution::Exception { note } => format!("exception ({note})"),
    }
}

fn kappa_text(h: cusp_atlas::KodairaHint) -> &'static str {
    match h {
        cusp_atlas::KodairaHint::MinusInfinity => "-inf",
        cusp_atlas::KodairaHint::OneOrTwo => "1 or 2",
    }
}

fn invariants_table(o: &mut String, r: &InvariantsReport) {
    let _ = writeln!(o, "type                       {}", r.ntype);
    let _ = writeln!(o, "delta                      {}", r.delta);
    let _ = writeln!(
        o,
        "generators                 {}",
        joined(&r.generators, " ")
    );
    let _ = writeln!(o, "conductor                  {}", r.conductor);
    let _ = writeln!(
        o,
        "parametrization exponents  {}",
        joined(&r.parametrization_exponents, " ")
    );
    let _ = writeln!(o, "degree                     {}", opt(r.degree));
    if let Some(note) = &r.degree_note {
        let _ = writeln!(o, "note                       {note}");
    }
    let _ = writeln!(o, "cbar_sq                    {}", opt(r.cbar_sq));
    let _ = writeln!(
        o,
        "kodaira hint               {}",
        r.kodaira_hint.map_or("", kappa_text)
    );
}

fn families_table(o: &mut String, r: &FamiliesReport) {
    let _ = writeln!(
        o,
        "{:<6} {:<10} {:<28} {:>20} {:>8}  kappa",
        "family", "params", "type", "degree", "cbar_sq"
    );
    for i in &r.instances {
        let _ = writeln!(
            o,
            "{:<6} {:<10} {:<28} {:>20} {:>8}  {}",
            i.family.as_str(),
            i.params.to_string(),
            i.ntype.to_string(),
            i.degree,
            i.cbar_sq,
            kappa_name(i.expected_kappa)
        );
    }
    let _ = writeln!(
        o,
        "{} instance(s) up to degree {}",
        r.instances.len(),
        r.max_degree
    );
}

fn kappa_name(k: cusp_atlas::ExpectedKappa) -> &'static str {
    match k {
        cusp_atlas::ExpectedKappa::MinusInfinity => "-inf",
        cusp_atlas::ExpectedKappa::One => "1",
        cusp_atlas::ExpectedKappa::Two => "2",
    }
}

fn identify_table(o: &mut String, r: &IdentifyReport) {
    let _ = write!(o, "{}/{}: ", r.ntype, r.degree);
    match (&r.families[..], &r.exception) {
        ([], Some(note)) => {
            let _ = writeln!(o, "no family; known exception ({note})");
        }
        ([], None) => {
            let _ = writeln!(o, "no family");
        }
        (fams, _) => {
            let _ = writeln!(o, "{}", joined(fams, " "));
        }
    }
}

fn csv_text(body: &Body) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut put = |rec: Vec<String>| w.write_record(&rec).expect("in-memory csv write");
    let s = |v: &dyn ToString| v.to_string();
    match body {
        Body::Criterion(r) => {
            put(vec![
                "type".into(),
                "degree".into(),
                "delta".into(),
                "j".into(),
                "r".into(),
                "target".into(),
            ]);
            for row in &r.rows {
                put(vec![
                    s(&r.ntype),
                    s(&r.degree),
                    s(&r.delta),
                    s(&row.j),
                    s(&row.r),
                    s(&row.target),
                ]);
            }
        }
        Body::Enumeration(doc) => {
            put([
                "degree",
                "p1",
                "q1",
                "p2",
                "q2",
                "delta",
                "cbar_sq",
                "families",
                "exception",
            ]
            .map(String::from)
            .to_vec());
            for e in &doc.report.candidates {
                let c = &e.candidate;
                let mut rec = vec![s(&c.degree)];
                rec.extend(pair_cells(&c.ntype));
                rec.extend([
                    s(&c.delta),
                    s(&c.cbar_sq),
                    joined(&e.families, ";"),
                    exception_cell(e.families.is_empty(), &e.exception),
                ]);
                put(rec);
            }
        }
        Body::Crosscheck(d) => {
            put(["status", "type", "degree", "detail"]
                .map(String::from)
                .to_vec());
            for m in &d.missing {
                put(vec![
                    "missing".into(),
                    s(&m.ntype),
                    s(&m.degree),
                    attribution_text(&m.attribution),
                ]);
            }
            for c in &d.unexpected {
                put(vec![
                    "unexpected".into(),
                    s(&c.ntype),
                    s(&c.degree),
                    String::new(),
                ]);
            }
            for e in &d.overlaps {
                let c = &e.candidate;
                put(vec![
                    "overlap".into(),
                    s(&c.ntype),
                    s(&c.degree),
                    joined(&e.families, ";"),
                ]);
            }
        }
        Body::Invariants(r) => {
            put([
                "type",
                "delta",
                "generators",
                "conductor",
                "exponents",
                "degree",
                "cbar_sq",
                "kodaira_hint",
                "note",
            ]
            .map(String::from)
            .to_vec());
            put(vec![
                s(&r.ntype),
                s(&r.delta),
                joined(&r.generators, ";"),
                s(&r.conductor),
                joined(&r.parametrization_exponents, ";"),
                opt(r.degree),
                opt(r.cbar_sq),
                r.kodaira_hint.map_or("", kappa_text).to_string(),
                r.degree_note.clone().unwrap_or_default(),
            ]);
        }
        Body::Families(r) => {
            put([
                "family",
                "params",
                "type",
                "degree",
                "cbar_sq",
                "expected_kappa",
            ]
            .map(String::from)
            .to_vec());
            for i in &r.instances {
                put(vec![
                    i.family.as_str().into(),
                    s(&i.params),
                    s(&i.ntype),
                    s(&i.degree),
                    s(&i.cbar_sq),
                    kappa_name(i.expected_kappa).into(),
                ]);
            }
        }
        Body::Identify(r) => {
            put(["type", "degree", "families", "exception"]
                .map(String::from)
                .to_vec());
            put(vec![
                s(&r.ntype),
                s(&r.degree),
                joined(&r.families, ";"),
                r.exception.clone().unwrap_or_default(),
            ]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

fn pair_cells(t: &SingularityType) -> [String; 4] {
    match t.two_pairs() {
        Some(x) => {
            let (p1, q1, p2, q2) = x.as_tuple();
            [p1, q1, p2, q2].map(|v| v.to_string())
        }
        None => Default::default(),
    }
}
