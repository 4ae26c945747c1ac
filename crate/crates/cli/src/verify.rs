//! The published example values, recomputed from bundled scheme files.

use std::path::Path;

use fiberbound::bounds::min_n_for_subscheme;
use fiberbound::invariants::{deformations_fixing_omega, kaehler, tangent_degree};
use serde_json::json;

use crate::report::Report;
use crate::scheme::{parse_scheme, SchemeFile, ORDER_ENV};
use crate::{CliError, Exit};

/// Bundled fixtures, by file name.
pub const FIXTURES: &[(&str, &str)] = &[
    (
        "quartic_pair.scheme",
        include_str!("../fixtures/quartic_pair.scheme"),
    ),
    (
        "fermat_cone.scheme",
        include_str!("../fixtures/fermat_cone.scheme"),
    ),
    (
        "cube_of_maximal.scheme",
        include_str!("../fixtures/cube_of_maximal.scheme"),
    ),
    (
        "corank_1.scheme",
        include_str!("../fixtures/corank_1.scheme"),
    ),
    (
        "corank_2.scheme",
        include_str!("../fixtures/corank_2.scheme"),
    ),
    (
        "corank_3.scheme",
        include_str!("../fixtures/corank_3.scheme"),
    ),
    (
        "corank_4.scheme",
        include_str!("../fixtures/corank_4.scheme"),
    ),
    (
        "corank_5.scheme",
        include_str!("../fixtures/corank_5.scheme"),
    ),
    (
        "curvilinear_2.scheme",
        include_str!("../fixtures/curvilinear_2.scheme"),
    ),
    (
        "curvilinear_3.scheme",
        include_str!("../fixtures/curvilinear_3.scheme"),
    ),
    (
        "curvilinear_4.scheme",
        include_str!("../fixtures/curvilinear_4.scheme"),
    ),
    (
        "curvilinear_5.scheme",
        include_str!("../fixtures/curvilinear_5.scheme"),
    ),
    (
        "curvilinear_6.scheme",
        include_str!("../fixtures/curvilinear_6.scheme"),
    ),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: i64,
    /// The computed value, or the error that prevented computing it.
    pub actual: Result<i64, String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.actual == Ok(self.expected)
    }
}

struct Source<'a> {
    dir: Option<&'a Path>,
    env_order: Option<String>,
}

impl Source<'_> {
    fn load(&self, name: &str) -> Result<SchemeFile, String> {
        let text = match self.dir {
            Some(d) => std::fs::read_to_string(d.join(name)).map_err(|e| format!("{name}: {e}"))?,
            None => FIXTURES
                .iter()
                .find(|(n, _)| *n == name)
                .expect("bundled fixture")
                .1
                .to_string(),
        };
        parse_scheme(&text, self.env_order.as_deref()).map_err(|e| format!("{name}:{e}"))
    }
}

fn to_i64(v: usize) -> i64 {
    v as i64
}

/// Compute a group of checks that share one loaded fixture; if loading or
/// computing fails, every check in the group records the error.
fn group<F>(out: &mut Vec<Check>, names: &[(&str, i64)], compute: F)
where
    F: FnOnce() -> Result<Vec<i64>, String>,
{
    match compute() {
        Ok(values) => {
            for ((name, expected), v) in names.iter().zip(values) {
                out.push(Check {
                    name: name.to_string(),
                    expected: *expected,
                    actual: Ok(v),
                });
            }
        }
        Err(e) => {
            for (name, expected) in names {
                out.push(Check {
                    name: name.to_string(),
                    expected: *expected,
                    actual: Err(e.clone()),
                });
            }
        }
    }
}

pub fn run_checks(dir: Option<&Path>) -> Vec<Check> {
    let src = Source {
        dir,
        env_order: std::env::var(ORDER_ENV).ok(),
    };
    let e = |x: fiberbound::Error| x.to_string();
    let mut out = Vec::new();

    group(
        &mut out,
        &[
            ("quartic_pair.degree", 20),
            ("quartic_pair.fixed_omega_dim", 17),
            ("quartic_pair.closure_dim", 18),
        ],
        || {
            let s = src.load("quartic_pair.scheme")?;
            let d = deformations_fixing_omega(&s.ideal).map_err(e)?;
            let cl = d.closure().map_err(e)?;
            Ok(vec![
                to_i64(d.algebra.degree()),
                to_i64(d.dim()),
                to_i64(cl.dim()),
            ])
        },
    );

    for d in 1..=5i64 {
        let deg = format!("corank_{d}.degree");
        let tan = format!("corank_{d}.tangent_degree");
        group(&mut out, &[(&deg, d + 1), (&tan, d * d)], || {
            let s = src.load(&format!("corank_{d}.scheme"))?;
            let deg = s.ideal.standard_monomials().map_err(e)?.len();
            Ok(vec![
                to_i64(deg),
                to_i64(tangent_degree(&s.ideal).map_err(e)?),
            ])
        });
    }

    group(
        &mut out,
        &[
            ("cube_of_maximal.tangent_degree", 27),
            ("cube_of_maximal.min_n_c1", 36),
        ],
        || {
            let s = src.load("cube_of_maximal.scheme")?;
            Ok(vec![
                to_i64(tangent_degree(&s.ideal).map_err(e)?),
                min_n_for_subscheme(&s.ideal, 1, 0).map_err(e)?,
            ])
        },
    );

    group(
        &mut out,
        &[
            ("fermat_cone.degree", 31),
            ("fermat_cone.tangent_degree", 70),
            ("fermat_cone.min_n_c1_m1", 69),
        ],
        || {
            let s = src.load("fermat_cone.scheme")?;
            let deg = s.ideal.standard_monomials().map_err(e)?.len();
            Ok(vec![
                to_i64(deg),
                to_i64(tangent_degree(&s.ideal).map_err(e)?),
                min_n_for_subscheme(&s.ideal, 1, 1).map_err(e)?,
            ])
        },
    );

    for m in 2..=6i64 {
        let om = format!("curvilinear_{m}.omega_degree");
        let cl = format!("curvilinear_{m}.closure_dim");
        group(&mut out, &[(&om, m - 1), (&cl, 2 * m - (m - 1))], || {
            let s = src.load(&format!("curvilinear_{m}.scheme"))?;
            let omega = kaehler(&s.ideal).map_err(e)?.dim();
            let d = deformations_fixing_omega(&s.ideal).map_err(e)?;
            Ok(vec![to_i64(omega), to_i64(d.closure().map_err(e)?.dim())])
        });
    }
    out
}

pub fn verify_paper(dir: Option<&Path>) -> Result<Report, CliError> {
    if let Some(d) = dir {
        if !d.is_dir() {
            return Err(CliError::input(format!("{}: not a directory", d.display())));
        }
    }
    let checks = run_checks(dir);
    let passed = checks.iter().filter(|c| c.passed()).count();
    let mut lines: Vec<String> = checks
        .iter()
        .map(|c| match (&c.actual, c.passed()) {
            (Ok(v), true) => format!("PASS {}: {v}", c.name),
            (Ok(v), false) => format!("FAIL {}: expected {}, got {v}", c.name, c.expected),
            (Err(msg), _) => format!("FAIL {}: expected {}, error: {msg}", c.name, c.expected),
        })
        .collect();
    lines.push(format!("{passed}/{} checks passed", checks.len()));
    let json_checks: Vec<_> = checks
        .iter()
        .map(|c| {
            json!({
                "actual": c.actual.as_ref().ok(),
                "error": c.actual.as_ref().err(),
                "expected": c.expected,
                "name": c.name,
                "passed": c.passed(),
            })
        })
        .collect();
    let all = passed == checks.len();
    Ok(Report {
        command: "verify-paper",
        input: json!({ "fixtures": dir.map(|d| d.display().to_string()) }),
        result: json!({ "all_passed": all, "checks": json_checks, "passed": passed, "total": checks.len() }),
        lines,
        exit: if all { Exit::Success } else { Exit::Violated },
    })
}
