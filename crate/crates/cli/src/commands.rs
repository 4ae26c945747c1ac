use std::path::{Path, PathBuf};

use fiberbound::bounds::{
    check_family_bound, check_fiber_bound, check_subscheme_bound, check_thom_boardman, BoundKind,
    BoundReport, FiberScenario,
};
use fiberbound::invariants::{
    deformations_fixing_omega, q_invariant, scheme_invariants, tangent_degree,
};
use serde_json::{json, Value};

use crate::report::{bound_json, bound_lines, rational, Report};
use crate::scheme::{load_scheme, LoadError, SchemeFile};
use crate::{CliError, Exit};

pub fn load(path: &Path) -> Result<SchemeFile, CliError> {
    load_scheme(path).map_err(|e| match e {
        LoadError::Io(io) => CliError::input(format!("{}: {io}", path.display())),
        LoadError::Parse(p) => CliError::input(format!("{}:{p}", path.display())),
    })
}

fn scheme_input(path: &Path, s: &SchemeFile) -> Value {
    json!({
        "file": path.display().to_string(),
        "field": s.field.to_string(),
        "generators": s.generators,
        "order": s.order.name(),
        "vars": s.vars,
    })
}

pub fn invariants(path: &Path) -> Result<Report, CliError> {
    let s = load(path)?;
    let inv = scheme_invariants(&s.ideal)?;
    Ok(Report {
        command: "invariants",
        input: scheme_input(path, &s),
        result: json!({
            "degree": inv.degree,
            "normal_degree": inv.normal_degree,
            "omega_degree": inv.omega_degree,
            "tangent_degree": inv.tangent_degree,
        }),
        lines: vec![
            format!("degree: {}", inv.degree),
            format!("omega_degree: {}", inv.omega_degree),
            format!("tangent_degree: {}", inv.tangent_degree),
            format!("normal_degree: {}", inv.normal_degree),
        ],
        exit: Exit::Success,
    })
}

#[derive(Clone, Debug, Default)]
pub struct BoundArgs {
    pub n: Option<u64>,
    pub c: Option<u64>,
    pub m: Option<u64>,
    pub coranks: Vec<u64>,
    pub deg_z: Option<u64>,
    pub deg_closure: Option<u64>,
}

fn require(v: Option<u64>, flag: &str, kind: BoundKind) -> Result<u64, CliError> {
    v.ok_or_else(|| CliError::input(format!("bound {kind} requires --{flag}")))
}

fn degree_and_tangent(s: &SchemeFile) -> Result<(u64, u64), CliError> {
    let deg = s.ideal.standard_monomials()?.len() as u64;
    Ok((deg, tangent_degree(&s.ideal)? as u64))
}

pub fn bound(kind: BoundKind, args: &BoundArgs, files: &[PathBuf]) -> Result<Report, CliError> {
    let n = require(args.n, "n", kind)?;
    let c = require(args.c, "c", kind)?;
    let m = args.m.unwrap_or(0);
    if m > 0 && kind != BoundKind::Family {
        return Err(CliError::input(format!(
            "--m only applies to `bound family`, not `bound {kind}`"
        )));
    }
    if !args.coranks.is_empty() && kind != BoundKind::ThomBoardman {
        return Err(CliError::input("--coranks only applies to `bound tb`"));
    }
    if (args.deg_z.is_some() || args.deg_closure.is_some()) && kind != BoundKind::Fiber {
        return Err(CliError::input(
            "--deg-z and --deg-closure only apply to `bound fiber`",
        ));
    }
    let s = FiberScenario::new(n, c, m).map_err(|e| CliError::input(e.to_string()))?;
    let mut reports: Vec<BoundReport> = Vec::new();
    match kind {
        BoundKind::ThomBoardman => {
            if args.coranks.is_empty() {
                return Err(CliError::input("bound tb requires --coranks"));
            }
            if !files.is_empty() {
                return Err(CliError::input("bound tb takes no scheme files"));
            }
            reports.push(check_thom_boardman(&args.coranks, &s)?);
        }
        BoundKind::Subscheme => {
            if files.is_empty() {
                return Err(CliError::input(
                    "bound subscheme requires at least one scheme file",
                ));
            }
            for f in files {
                let (deg_y, deg_t) = degree_and_tangent(&load(f)?)?;
                reports.push(check_subscheme_bound(deg_y, deg_t, &s)?);
            }
        }
        BoundKind::Family => {
            // members of one flat family: common degree, least tangent degree
            if files.is_empty() {
                return Err(CliError::input(
                    "bound family requires at least one member scheme file",
                ));
            }
            let mut deg_u = None;
            let mut min_t = u64::MAX;
            for f in files {
                let (d, t) = degree_and_tangent(&load(f)?)?;
                if deg_u.is_some_and(|u| u != d) {
                    return Err(CliError::input(format!(
                        "{}: degree {d} differs from the other family members",
                        f.display()
                    )));
                }
                deg_u = Some(d);
                min_t = min_t.min(t);
            }
            reports.push(check_family_bound(deg_u.expect("nonempty"), min_t, &s)?);
        }
        BoundKind::Fiber => {
            match (args.deg_z, args.deg_closure, files) {
                (Some(z), Some(cl), []) => reports.push(check_fiber_bound(z, cl, &s)?),
                (None, None, [f]) => {
                    // the fixed-Omega space contains the tangent image of any
                    // family of fibers through Z, so its closure bounds theirs
                    let d = deformations_fixing_omega(&load(f)?.ideal)?;
                    let cl = d.closure()?.dim() as u64;
                    reports.push(check_fiber_bound(d.algebra.degree() as u64, cl, &s)?);
                }
                _ => return Err(CliError::input(
                    "bound fiber takes either --deg-z and --deg-closure or exactly one scheme file",
                )),
            }
        }
    }
    let all = reports.iter().all(|r| r.satisfied);
    let files: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
    Ok(Report {
        command: "bound",
        input: json!({
            "c": c,
            "coranks": args.coranks,
            "deg_closure": args.deg_closure,
            "deg_z": args.deg_z,
            "files": files,
            "kind": kind.name(),
            "m": m,
            "n": n,
        }),
        result: json!({
            "all_satisfied": all,
            "reports": reports.iter().map(bound_json).collect::<Vec<_>>(),
        }),
        lines: reports.iter().flat_map(bound_lines).collect(),
        exit: if all { Exit::Success } else { Exit::Violated },
    })
}

pub fn deform(path: &Path, fix_omega: bool, closure: bool) -> Result<Report, CliError> {
    let s = load(path)?;
    let d = deformations_fixing_omega(&s.ideal)?;
    let space = if fix_omega {
        d.space.clone()
    } else {
        fiberbound::linalg::Subspace::full(d.algebra.field(), d.normal.dim())
    };
    let closure_dim = if closure {
        Some(
            fiberbound::finmod::submodule_closure(&d.normal.module, &space)
                .map_err(CliError::from)?
                .dim(),
        )
    } else {
        None
    };
    let label = if fix_omega { "fixed_omega" } else { "normal" };
    let mut lines = vec![
        format!("degree: {}", d.algebra.degree()),
        format!("normal_dim: {}", d.normal.dim()),
        format!("space: {label}"),
        format!("space_dim: {}", space.dim()),
    ];
    if let Some(c) = closure_dim {
        lines.push(format!("closure_dim: {c}"));
    }
    let mut input = scheme_input(path, &s);
    input["closure"] = json!(closure);
    input["fix_omega"] = json!(fix_omega);
    Ok(Report {
        command: "deform",
        input,
        result: json!({
            "closure_dim": closure_dim,
            "degree": d.algebra.degree(),
            "normal_dim": d.normal.dim(),
            "space": label,
            "space_dim": space.dim(),
        }),
        lines,
        exit: Exit::Success,
    })
}

pub fn qinv(x: &Path, y: &Path, dim_x: Option<usize>) -> Result<Report, CliError> {
    let sx = load(x)?;
    let sy = load(y)?;
    if sx.vars != sy.vars || sx.field != sy.field {
        return Err(CliError::input(
            "X and Y must use the same field and variables",
        ));
    }
    let iy = fiberbound::groebner::Ideal::new(sx.ring(), {
        sy.ideal
            .generators()
            .iter()
            .map(|g| g.to_ring(sx.ring()))
            .collect::<Result<Vec<_>, _>>()?
    })?;
    let declared = dim_x.or(sx.declared_dim);
    let q = q_invariant(&sx.ideal, &iy, declared)?;
    let matches = q.q == num_rational::BigRational::from_integer(q.degree_z.into());
    Ok(Report {
        command: "qinv",
        input: json!({
            "dim_x": declared,
            "x": scheme_input(x, &sx),
            "y": scheme_input(y, &sy),
        }),
        result: json!({
            "codim_y": q.codim_y,
            "cokernel_degree": q.cokernel,
            "degree_z": q.degree_z,
            "dim_x": q.dim_x,
            "equals_degree_z": matches,
            "hom_conormal_x": q.hom_conormal_x,
            "hom_normal_y": q.hom_normal_y,
            "q": rational(&q.q),
        }),
        lines: vec![
            format!("q: {}", q.q),
            format!("cokernel_degree: {}", q.cokernel),
            format!("codim_y: {}", q.codim_y),
            format!("dim_x: {}", q.dim_x),
            format!("degree_z: {}", q.degree_z),
            format!("equals_degree_z: {matches}"),
        ],
        exit: Exit::Success,
    })
}
