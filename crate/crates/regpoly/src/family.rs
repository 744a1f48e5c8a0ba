//! Family specifications from command-line words.
//!
//! A family is a name followed by integer parameters, either as separate
//! arguments (`lambda 6 3 3`) or in the compact form `lambda:6,3,3` used for
//! the parts of an amalgam.

use regpoly_core::constructions::{named_presentation, Family, FamilySpec};
use regpoly_core::presentation::{finite_symbol, parse_word};
use regpoly_core::{Kind, SchlafliEntry};

pub const FAMILIES: &[(&str, &str)] = &[
    (
        "coxeter",
        "p1 p2 ...   universal polytope {p1,p2,...}; entries may be `inf`",
    ),
    ("lambda", "p1 p2 ...   central extension of a simplex, entries 3 or 6"),
    (
        "torus44",
        "b c         torus map {4,4}_(b,c); chiral unless c = 0 or b = c",
    ),
    ("torus36", "b c         torus map {3,6}_(b,c)"),
    ("torus63", "b c         torus map {6,3}_(b,c)"),
    ("hemi", "p q k       [p,q] with (r0 r1 r2)^k added"),
    (
        "amalgam",
        "K L         universal {K,L}, parts in compact form, e.g. coxeter:4,3",
    ),
    ("named", "name        a built-in polytope"),
];

fn int(s: &str) -> Result<u32, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("expected a non-negative integer, found {s:?}"))
}

fn entry(s: &str) -> Result<SchlafliEntry, String> {
    match s.trim() {
        "inf" | "infinity" => Ok(SchlafliEntry::Infinite),
        t => match int(t)? {
            p if p >= 2 => Ok(SchlafliEntry::Finite(p)),
            p => Err(format!("Schläfli entries must be at least 2, found {p}")),
        },
    }
}

fn exactly<const N: usize>(family: &str, params: &[String]) -> Result<[u32; N], String> {
    if params.len() != N {
        return Err(format!("{family} takes {N} parameters, found {}", params.len()));
    }
    let mut out = [0; N];
    for (o, p) in out.iter_mut().zip(params) {
        *o = int(p)?;
    }
    Ok(out)
}

/// Parses `family params...`.
pub fn parse_family(family: &str, params: &[String]) -> Result<FamilySpec, String> {
    let spec = match family {
        "coxeter" => {
            if params.is_empty() {
                return Err("coxeter needs at least one entry".into());
            }
            Family::Coxeter {
                symbol: params.iter().map(|p| entry(p)).collect::<Result<_, _>>()?,
            }
        }
        "lambda" => Family::Lambda {
            symbol: params.iter().map(|p| int(p)).collect::<Result<_, _>>()?,
        },
        "torus44" => {
            let [b, c] = exactly(family, params)?;
            Family::Torus44 { b, c }
        }
        "torus36" => {
            let [b, c] = exactly(family, params)?;
            Family::Torus36 { b, c }
        }
        "torus63" => {
            let [b, c] = exactly(family, params)?;
            Family::Torus63 { b, c }
        }
        "hemi" => {
            let [p, q, k] = exactly(family, params)?;
            Family::Hemi { symbol: [p, q], k }
        }
        "amalgam" => {
            if params.len() != 2 {
                return Err("amalgam takes two parts, e.g. `amalgam coxeter:4,3 torus36:1,1`".into());
            }
            Family::Amalgam {
                facet: Box::new(parse_compact(&params[0])?),
                vertex_figure: Box::new(parse_compact(&params[1])?),
            }
        }
        "named" => match params {
            [name] => Family::Named { name: name.clone() },
            _ => return Err("named takes exactly one name".into()),
        },
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(spec.into())
}

/// Parses the compact form `family:p1,p2,...`.
pub fn parse_compact(s: &str) -> Result<FamilySpec, String> {
    let (family, rest) = s.split_once(':').unwrap_or((s, ""));
    let params: Vec<String> = rest
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::to_string)
        .collect();
    parse_family(family, &params)
}

/// Kind and rank of the presentation a spec builds.
pub fn shape(spec: &FamilySpec) -> Result<(Kind, usize), String> {
    let regular_torus = |b: u32, c: u32| b == 0 || c == 0 || b == c;
    Ok(match &spec.family {
        Family::Coxeter { symbol } => (Kind::Reflection, symbol.len() + 1),
        Family::Lambda { symbol } => (Kind::Reflection, symbol.len() + 1),
        Family::Torus44 { b, c } | Family::Torus36 { b, c } | Family::Torus63 { b, c } => {
            if regular_torus(*b, *c) {
                (Kind::Reflection, 3)
            } else {
                (Kind::Rotation, 3)
            }
        }
        Family::Hemi { .. } => (Kind::Reflection, 3),
        Family::Amalgam { facet, .. } => (Kind::Reflection, shape(facet)?.1 + 1),
        Family::Named { name } => {
            let (p, _) = named_presentation(name).ok_or_else(|| format!("unknown named polytope {name:?}"))?;
            (p.kind(), p.rank())
        }
    })
}

/// Adds extra relators, written in the presentation word syntax, to a spec.
pub fn with_relators(mut spec: FamilySpec, relators: &[String]) -> Result<FamilySpec, String> {
    let (kind, rank) = shape(&spec)?;
    let gens = match kind {
        Kind::Reflection => rank,
        Kind::Rotation => rank - 1,
    };
    for r in relators {
        let w = parse_word(r, kind, gens).map_err(|e| format!("relator {r:?}: {e}"))?;
        spec.extra_relators.push(w);
    }
    Ok(spec)
}

/// Shorthand for `coxeter` specs in tests and suites.
pub fn coxeter_spec(ps: &[u32]) -> FamilySpec {
    Family::Coxeter {
        symbol: finite_symbol(ps),
    }
    .into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn families_parse() {
        assert_eq!(
            parse_family("lambda", &strings(&["6", "3", "3"])).unwrap().family,
            Family::Lambda { symbol: vec![6, 3, 3] }
        );
        assert_eq!(
            parse_family("torus44", &strings(&["1", "2"])).unwrap().family,
            Family::Torus44 { b: 1, c: 2 }
        );
        let a = parse_family("amalgam", &strings(&["coxeter:4,3", "torus36:1,1"])).unwrap();
        let Family::Amalgam { facet, vertex_figure } = a.family else {
            panic!()
        };
        assert_eq!(*facet, coxeter_spec(&[4, 3]));
        assert_eq!(vertex_figure.family, Family::Torus36 { b: 1, c: 1 });
        assert_eq!(
            parse_compact("coxeter:4,inf").unwrap().family,
            Family::Coxeter {
                symbol: vec![SchlafliEntry::Finite(4), SchlafliEntry::Infinite]
            }
        );
    }

    #[test]
    fn bad_parameters() {
        assert!(parse_family("torus44", &strings(&["1"])).is_err());
        assert!(parse_family("coxeter", &strings(&["1"])).is_err());
        assert!(parse_family("coxeter", &strings(&["x"])).is_err());
        assert!(parse_family("polygon", &strings(&["5"])).is_err());
        assert!(parse_family("amalgam", &strings(&["coxeter:4,3"])).is_err());
    }
}
