use cusp_atlas::{
    cbar_squared, check_sdp, cross_check_report, degree_from_delta, enumerate_candidates,
    enumerate_family, identify, known_exceptions, kodaira_hint, CriterionError, EnumerationError,
    FamilyId, SingularityType, Verdict,
};

use crate::args::{Cli, Command};
use crate::document::{
    Body, Document, EnumerationDoc, FamiliesReport, IdentifyReport, InvariantsReport,
};

/// Process exit status: 0 pass, 1 mathematical failure, 2 usage or
/// validation error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Failure = 1,
    Usage = 2,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub document: Option<Document>,
    pub exit: Exit,
    /// Lines for stderr.
    pub diagnostics: Vec<String>,
}

impl Outcome {
    fn report(body: Body, exit: Exit) -> Self {
        Outcome {
            document: Some(Document::new(body)),
            exit,
            diagnostics: Vec::new(),
        }
    }

    fn error(exit: Exit, message: impl Into<String>) -> Self {
        Outcome {
            document: None,
            exit,
            diagnostics: vec![message.into()],
        }
    }

    fn note(mut self, line: impl Into<String>) -> Self {
        self.diagnostics.push(line.into());
        self
    }
}

/// Degree-genus problems are statements about the type, not about the
/// command line.
fn criterion_exit(e: &CriterionError) -> Exit {
    match e {
        CriterionError::NoIntegerDegree { .. }
        | CriterionError::DegenerateDegree { .. }
        | CriterionError::DegreeMismatch { .. }
        | CriterionError::InconsistentDegree { .. } => Exit::Failure,
        CriterionError::Semigroup(_) | CriterionError::Overflow(_) => Exit::Usage,
    }
}

fn criterion_failure(t: &SingularityType, e: CriterionError) -> Outcome {
    Outcome::error(criterion_exit(&e), format!("{t}: {e}"))
}

fn resolve_degree(t: &SingularityType, degree: Option<u128>) -> Result<u128, CriterionError> {
    let delta = t.delta()?;
    match degree {
        Some(d) => {
            if d < 3 {
                return Err(CriterionError::DegenerateDegree { delta });
            }
            // also rejects degrees off the degree-genus curve
            cbar_squared(t, d).map_err(|e| match e {
                CriterionError::InconsistentDegree { degree, delta } => {
                    CriterionError::DegreeMismatch { degree, delta }
                }
                e => e,
            })?;
            Ok(d)
        }
        None => degree_from_delta(delta),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { pairs, degree } => check(pairs, *degree),
        Command::Invariants { pairs, degree } => invariants(pairs, *degree),
        Command::Enumerate { max_degree } => enumerate(*max_degree, cli.workers()),
        Command::Crosscheck { max_degree } => crosscheck(*max_degree, cli.workers()),
        Command::Families { family, max_degree } => families(*family, *max_degree),
        Command::Identify { pairs, degree } => identify_type(pairs, *degree),
    }
}

fn check(t: &SingularityType, degree: Option<u128>) -> Outcome {
    let degree = match resolve_degree(t, degree) {
        Ok(d) => d,
        Err(e) => return criterion_failure(t, e),
    };
    match check_sdp(t, degree) {
        Ok(report) => {
            let exit = if report.verdict == Verdict::Pass {
                Exit::Pass
            } else {
                Exit::Failure
            };
            Outcome::report(Body::Criterion(report), exit)
        }
        Err(e) => criterion_failure(t, e),
    }
}

fn invariants(t: &SingularityType, degree: Option<u128>) -> Outcome {
    let (delta, generators) = match (t.delta(), t.generators()) {
        (Ok(d), Ok(g)) => (d, g),
        (Err(e), _) | (_, Err(e)) => return Outcome::error(Exit::Usage, format!("{t}: {e}")),
    };
    let exponents = match t {
        SingularityType::TwoPairs(x) => match x.parametrization_exponents() {
            Ok(p) => vec![p.x_exp, p.y_exp1, p.y_exp2],
            Err(e) => return Outcome::error(Exit::Usage, format!("{t}: {e}")),
        },
        SingularityType::OnePair(x) => vec![x.a(), x.b()],
    };
    let mut report = InvariantsReport {
        ntype: *t,
        delta,
        generators,
        conductor: 2 * delta,
        parametrization_exponents: exponents,
        degree: None,
        degree_note: None,
        cbar_sq: None,
        kodaira_hint: None,
    };
    let exit = match resolve_degree(t, degree).and_then(|d| Ok((d, cbar_squared(t, d)?))) {
        Ok((d, c)) => {
            report.degree = Some(d);
            report.cbar_sq = Some(c);
            report.kodaira_hint = Some(kodaira_hint(c));
            Exit::Pass
        }
        Err(e) => {
            let exit = criterion_exit(&e);
            report.degree = degree;
            report.degree_note = Some(e.to_string());
            exit
        }
    };
    Outcome::report(Body::Invariants(report), exit)
}

fn enumeration_error(e: EnumerationError) -> Outcome {
    let exit = match e {
        EnumerationError::BoundTooSmall(_) | EnumerationError::BoundTooLarge(_) => Exit::Usage,
        EnumerationError::Pool(_)
        | EnumerationError::Criterion { .. }
        | EnumerationError::Family(_) => Exit::Failure,
    };
    Outcome::error(exit, e.to_string())
}

fn diff_summary(diff: &cusp_atlas::CrossCheckDiff) -> String {
    format!(
        "crosscheck: {} missing, {} unexpected, {} overlapping",
        diff.missing.len(),
        diff.unexpected.len(),
        diff.overlaps.len()
    )
}

fn enumerate(max_degree: u64, workers: usize) -> Outcome {
    let report = match enumerate_candidates(max_degree, workers) {
        Ok(r) => r,
        Err(e) => return enumeration_error(e),
    };
    let diff = match cross_check_report(&report) {
        Ok(d) => d,
        Err(e) => return enumeration_error(e.into()),
    };
    let exit = if diff.is_empty() {
        Exit::Pass
    } else {
        Exit::Failure
    };
    let timing = format!(
        "enumerated {} types up to degree {max_degree} in {:.3} s on {workers} worker(s); {} passed",
        report.stats.types_scanned,
        report.elapsed.as_secs_f64(),
        report.stats.passes
    );
    let summary = diff_summary(&diff);
    Outcome::report(
        Body::Enumeration(EnumerationDoc {
            report,
            crosscheck: diff,
        }),
        exit,
    )
    .note(timing)
    .note(summary)
}

fn crosscheck(max_degree: u64, workers: usize) -> Outcome {
    match cusp_atlas::cross_check(max_degree, workers) {
        Ok(diff) => {
            let exit = if diff.is_empty() {
                Exit::Pass
            } else {
                Exit::Failure
            };
            let summary = diff_summary(&diff);
            Outcome::report(Body::Crosscheck(diff), exit).note(summary)
        }
        Err(e) => enumeration_error(e),
    }
}

fn families(family: Option<FamilyId>, max_degree: u128) -> Outcome {
    let ids = match family {
        Some(f) => vec![f],
        None => FamilyId::ALL.to_vec(),
    };
    let mut instances = Vec::new();
    for f in ids {
        match enumerate_family(f, max_degree) {
            Ok(v) => instances.extend(v),
            Err(e) => return Outcome::error(Exit::Failure, format!("family {f}: {e}")),
        }
    }
    Outcome::report(
        Body::Families(FamiliesReport {
            max_degree,
            family,
            instances,
        }),
        Exit::Pass,
    )
}

fn identify_type(t: &SingularityType, degree: Option<u128>) -> Outcome {
    let degree = match resolve_degree(t, degree) {
        Ok(d) => d,
        Err(e) => return criterion_failure(t, e),
    };
    let families = identify(t, degree);
    let exception = known_exceptions()
        .into_iter()
        .find(|x| SingularityType::from(x.ntype) == *t && x.degree == degree)
        .map(|x| x.exclusion_note);
    Outcome::report(
        Body::Identify(IdentifyReport {
            ntype: *t,
            degree,
            families,
            exception,
        }),
        Exit::Pass,
    )
}
