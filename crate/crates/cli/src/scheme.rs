//! Line-oriented scheme description files.
//!
//! ```text
//! # comment
//! field: QQ            # or `Fp 32003`; defaults to QQ
//! vars: x y z
//! order: grevlex       # optional; FIBERBOUND_ORDER, then grevlex
//! dim: 1               # optional declared dimension
//! ideal:
//!   x^3 + y^3 + z^3
//!   x*y
//! ```

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use fiberbound::groebner::Ideal;
use fiberbound::ring::{parse_poly, FieldSpec, MonomialOrder, PolyRing};
use fiberbound::Error;

pub const ORDER_ENV: &str = "FIBERBOUND_ORDER";

/// A validation error with a 1-based line and column (line 0 when the
/// problem is outside the file).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SchemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            // not tied to a location in the file
            return f.write_str(&self.message);
        }
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SchemeError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> SchemeError {
    SchemeError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug)]
pub struct SchemeFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub generators: Vec<String>,
    pub declared_dim: Option<usize>,
    pub ideal: Ideal,
}

impl SchemeFile {
    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn position_of(e: &Error) -> Option<usize> {
    match e {
        Error::Syntax { position, .. }
        | Error::UnknownVariable { position, .. }
        | Error::BadExponent { position, .. } => Some(*position),
        _ => None,
    }
}

/// Parse scheme text. `env_order` is the value of [`ORDER_ENV`], used when
/// the file has no `order:` line.
pub fn parse_scheme(text: &str, env_order: Option<&str>) -> Result<SchemeFile, SchemeError> {
    let mut field = None;
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut order = None;
    let mut declared_dim = None;
    // (line, column of expression start, text)
    let mut exprs: Vec<(usize, usize, String)> = Vec::new();
    let mut ideal_line = None;
    let mut in_ideal = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        if in_ideal && indent > 0 {
            exprs.push((lineno, indent + 1, line.trim_start().trim_end().to_string()));
            continue;
        }
        in_ideal = false;
        if indent > 0 {
            return Err(err(
                lineno,
                1,
                "unexpected indented line outside an `ideal:` block",
            ));
        }
        let Some(colon) = line.find(':') else {
            return Err(err(lineno, 1, "expected `key: value`"));
        };
        let key = line[..colon].trim();
        let value = &line[colon + 1..];
        let vcol = colon + 2 + (value.len() - value.trim_start().len());
        let value = value.trim();
        match key {
            "field" => {
                if field.is_some() {
                    return Err(err(lineno, 1, "duplicate `field`"));
                }
                field = Some(parse_field(value).map_err(|m| err(lineno, vcol, m))?);
            }
            "vars" => {
                if vars.is_some() {
                    return Err(err(lineno, 1, "duplicate `vars`"));
                }
                let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(err(lineno, vcol, "no variables listed"));
                }
                vars = Some((names, lineno));
            }
            "order" => {
                if order.is_some() {
                    return Err(err(lineno, 1, "duplicate `order`"));
                }
                order = Some(
                    value
                        .parse::<MonomialOrder>()
                        .map_err(|e| err(lineno, vcol, e.to_string()))?,
                );
            }
            "dim" => {
                if declared_dim.is_some() {
                    return Err(err(lineno, 1, "duplicate `dim`"));
                }
                declared_dim = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| err(lineno, vcol, "dim must be a nonnegative integer"))?,
                );
            }
            "ideal" => {
                if ideal_line.is_some() {
                    return Err(err(lineno, 1, "duplicate `ideal`"));
                }
                if !value.is_empty() {
                    exprs.push((lineno, vcol, value.to_string()));
                }
                ideal_line = Some(lineno);
                in_ideal = true;
            }
            other => return Err(err(lineno, 1, format!("unknown key `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let (vars, vars_line) = vars.ok_or_else(|| err(last, 1, "missing `vars:` line"))?;
    let ideal_line = ideal_line.ok_or_else(|| err(last, 1, "missing `ideal:` block"))?;
    if exprs.is_empty() {
        return Err(err(ideal_line, 1, "the ideal has no generators"));
    }
    let order = match order {
        Some(o) => o,
        None => match env_order {
            Some(v) => v
                .parse::<MonomialOrder>()
                .map_err(|e| err(0, 0, format!("{ORDER_ENV}: {e}")))?,
            None => MonomialOrder::default(),
        },
    };
    let field = field.unwrap_or(FieldSpec::Rationals);
    let ring =
        PolyRing::new(field, vars.clone(), order).map_err(|e| err(vars_line, 1, e.to_string()))?;
    let mut polys = Vec::with_capacity(exprs.len());
    for (line, col, text) in &exprs {
        let p = parse_poly(text, &ring).map_err(|e| {
            let at = position_of(&e).unwrap_or(0);
            err(*line, col + at, e.to_string())
        })?;
        polys.push(p);
    }
    let ideal = Ideal::new(&ring, polys).map_err(|e| err(ideal_line, 1, e.to_string()))?;
    Ok(SchemeFile {
        field,
        vars,
        order,
        generators: exprs.into_iter().map(|(_, _, t)| t).collect(),
        declared_dim,
        ideal,
    })
}

fn parse_field(value: &str) -> Result<FieldSpec, String> {
    let parts: Vec<&str> = value.split_whitespace().collect();
    match parts.as_slice() {
        ["QQ"] => Ok(FieldSpec::Rationals),
        ["Fp", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| format!("`{p}` is not a valid prime"))?;
            FieldSpec::prime(p).map_err(|e| e.to_string())
        }
        _ => Err(format!(
            "unknown field `{value}` (expected `QQ` or `Fp <prime>`)"
        )),
    }
}

/// Errors from reading a scheme file from disk.
#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Parse(SchemeError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "{e}"),
            LoadError::Parse(e) => write!(f, "{e}"),
        }
    }
}

pub fn load_scheme(path: &Path) -> Result<SchemeFile, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    let env = std::env::var(ORDER_ENV).ok();
    parse_scheme(&text, env.as_deref()).map_err(LoadError::Parse)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLANE: &str = "# plane quartic pair\nfield: QQ\nvars: x y\norder: grevlex\nideal:\n  x^4+y^4\n  x*y*(x-y)*(x+y)*(x-2*y)\n";

    #[test]
    fn parses_a_full_file() {
        let s = parse_scheme(PLANE, None).unwrap();
        assert_eq!(s.vars, vec!["x", "y"]);
        assert_eq!(s.generators.len(), 2);
        assert_eq!(s.ideal.standard_monomials().unwrap().len(), 20);
    }

    #[test]
    fn defaults_and_env_order() {
        let text = "vars: x y\nideal:\n  x^2\n  y^3\n";
        let s = parse_scheme(text, None).unwrap();
        assert_eq!(s.field, FieldSpec::Rationals);
        assert_eq!(s.order, MonomialOrder::Grevlex);
        assert_eq!(
            parse_scheme(text, Some("lex")).unwrap().order,
            MonomialOrder::Lex
        );
        // an explicit order line wins over the environment
        assert_eq!(
            parse_scheme(PLANE, Some("lex")).unwrap().order,
            MonomialOrder::Grevlex
        );
        assert!(parse_scheme(text, Some("bogus")).is_err());
    }

    #[test]
    fn prime_fields_and_declared_dimension() {
        let s = parse_scheme("field: Fp 7\nvars: x\ndim: 0\nideal: x^7 - x\n", None).unwrap();
        assert_eq!(s.field.characteristic(), 7);
        assert_eq!(s.declared_dim, Some(0));
        assert!(parse_scheme("field: Fp 8\nvars: x\nideal: x\n", None).is_err());
    }

    #[test]
    fn errors_carry_line_and_column() {
        let e = parse_scheme("vars: x y\nideal:\n  x^2 + z\n", None).unwrap_err();
        assert_eq!((e.line, e.column), (3, 9));
        let e = parse_scheme("vars: x y\nideal:\n  x^2 +\n", None).unwrap_err();
        assert_eq!((e.line, e.column), (3, 8));
        let e = parse_scheme("vars: x\nbogus: 1\nideal: x\n", None).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_scheme("field: RR\nvars: x\nideal: x\n", None).unwrap_err();
        assert_eq!((e.line, e.column), (1, 8));
        let e = parse_scheme("vars: x\n", None).unwrap_err();
        assert!(e.message.contains("ideal"));
        let e = parse_scheme("vars: x x\nideal: x\n", None).unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_scheme("vars: x\nideal:\n  0\n", None).unwrap_err();
        assert_eq!(e.line, 2);
    }
}
