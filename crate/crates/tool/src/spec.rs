//! Object specs: a file path, or a short description of a named family.
//!
//! ```text
//! dihedral 9                         R_9
//! trivial 3                          T_3
//! alexander z5 x2                    Z/5 with a ↦ 2a
//! alexander z3xz3 m0,-1;1,0          Z/3 ⊕ Z/3 with a matrix, rows split by `;`
//! conj dihedral 9 reflections        Conj of a subset of a group
//! conj symmetric 3 all
//! genpair dihedral 9 reflections     (G, Ω) for a group and subset
//! inn dihedral 3                     (Inn Q, s(Q)) for a quandle spec
//! ```

use std::path::Path;

use quandle_core::perm::{reflections, transpositions, PermGroup, Permutation};
use quandle_core::quandle::{AbelianAutomorphism, AbelianGroup};
use quandle_core::{GenPair, Quandle};

use crate::format::{self, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Quandle(Quandle),
    GenPair(GenPair),
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("invalid spec `{spec}`: {message}")]
    Invalid { spec: String, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: String, source: ParseError },
    #[error("`{spec}`: {source}")]
    Core {
        spec: String,
        source: quandle_core::Error,
    },
}

fn invalid(spec: &str, message: impl Into<String>) -> SpecError {
    SpecError::Invalid {
        spec: spec.to_string(),
        message: message.into(),
    }
}

fn number(spec: &str, token: Option<&&str>) -> Result<usize, SpecError> {
    let token = token.ok_or_else(|| invalid(spec, "missing a number"))?;
    token
        .parse()
        .map_err(|_| invalid(spec, format!("`{token}` is not a number")))
}

/// Resolves a spec to a quandle or genpair. Existing file paths win over
/// family names.
pub fn resolve(spec: &str, cap: usize) -> Result<Object, SpecError> {
    let path = Path::new(spec.trim());
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: spec.to_string(),
            source,
        })?;
        let file_err = |source| SpecError::File {
            path: spec.to_string(),
            source,
        };
        return if format::is_quandle_text(&text) {
            format::parse_quandle(&text).map(Object::Quandle).map_err(file_err)
        } else {
            format::parse_genpair(&text, cap).map(Object::GenPair).map_err(file_err)
        };
    }
    let core = |source| SpecError::Core {
        spec: spec.to_string(),
        source,
    };
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    match tokens.first().copied() {
        Some("dihedral") if tokens.len() == 2 => {
            Quandle::dihedral(number(spec, tokens.get(1))?).map(Object::Quandle).map_err(core)
        }
        Some("trivial") if tokens.len() == 2 => {
            Quandle::trivial(number(spec, tokens.get(1))?).map(Object::Quandle).map_err(core)
        }
        Some("alexander") if tokens.len() == 3 => {
            let phi = automorphism(spec, tokens[1], tokens[2])?;
            Quandle::alexander(&phi).map(Object::Quandle).map_err(core)
        }
        Some("conj") => {
            let (group, omega) = group_and_subset(spec, &tokens[1..], cap)?;
            Quandle::conjugation(&group, &omega).map(Object::Quandle).map_err(core)
        }
        Some("genpair") => {
            let (group, omega) = group_and_subset(spec, &tokens[1..], cap)?;
            GenPair::new(group, omega).map(Object::GenPair).map_err(core)
        }
        Some("inn") => {
            let inner = tokens[1..].join(" ");
            match resolve(&inner, cap)? {
                Object::Quandle(q) => q.inn_with_cap(cap).map(Object::GenPair).map_err(core),
                Object::GenPair(_) => Err(invalid(spec, "`inn` needs a quandle")),
            }
        }
        _ => Err(invalid(
            spec,
            "expected a file path or one of dihedral, trivial, alexander, conj, genpair, inn",
        )),
    }
}

pub fn resolve_quandle(spec: &str, cap: usize) -> Result<Quandle, SpecError> {
    match resolve(spec, cap)? {
        Object::Quandle(q) => Ok(q),
        Object::GenPair(_) => Err(invalid(spec, "expected a quandle, found a genpair")),
    }
}

/// A genpair spec, or a quandle spec read as `(Inn Q, s(Q))`.
pub fn resolve_genpair(spec: &str, cap: usize) -> Result<GenPair, SpecError> {
    match resolve(spec, cap)? {
        Object::GenPair(p) => Ok(p),
        Object::Quandle(q) => q.inn_with_cap(cap).map_err(|source| SpecError::Core {
            spec: spec.to_string(),
            source,
        }),
    }
}

/// `z5`, `z3xz3`: cyclic factors separated by `x`.
fn abelian_group(spec: &str, token: &str) -> Result<AbelianGroup, SpecError> {
    let orders = token
        .split('x')
        .map(|f| {
            f.strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| invalid(spec, format!("`{token}` is not a group like z5 or z3xz3")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    AbelianGroup::new(orders).map_err(|source| SpecError::Core {
        spec: spec.to_string(),
        source,
    })
}

/// `x2` for multiplication by 2, `m0,-1;1,0` for a matrix.
fn automorphism(spec: &str, group: &str, map: &str) -> Result<AbelianAutomorphism, SpecError> {
    let group = abelian_group(spec, group)?;
    let core = |source| SpecError::Core {
        spec: spec.to_string(),
        source,
    };
    if let Some(k) = map.strip_prefix('x') {
        let k: i64 = k.parse().map_err(|_| invalid(spec, format!("`{map}` is not a scalar like x2")))?;
        return AbelianAutomorphism::scalar(group, k).map_err(core);
    }
    if let Some(body) = map.strip_prefix('m') {
        let matrix = body
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|c| c.parse::<i64>().map_err(|_| invalid(spec, format!("bad matrix entry `{c}`"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        return AbelianAutomorphism::new(group, &matrix).map_err(core);
    }
    Err(invalid(spec, format!("`{map}` is neither x<k> nor m<matrix>")))
}

/// `<family> <n> <subset>` with subset `reflections`, `transpositions` or
/// `all`.
fn group_and_subset(spec: &str, tokens: &[&str], cap: usize) -> Result<(PermGroup, Vec<Permutation>), SpecError> {
    if tokens.len() != 3 {
        return Err(invalid(spec, "expected `<family> <n> <subset>`"));
    }
    let n = number(spec, tokens.get(1))?;
    let core = |source| SpecError::Core {
        spec: spec.to_string(),
        source,
    };
    let group = match tokens[0] {
        "dihedral" => PermGroup::dihedral(n),
        "symmetric" => PermGroup::symmetric(n, cap),
        "cyclic" => PermGroup::cyclic(n),
        other => return Err(invalid(spec, format!("unknown group family `{other}`"))),
    }
    .map_err(core)?;
    let omega = match tokens[2] {
        "reflections" => reflections(n),
        "transpositions" => transpositions(n),
        "all" => group.elements().to_vec(),
        other => return Err(invalid(spec, format!("unknown subset `{other}`"))),
    };
    Ok((group, omega))
}

/// A short display name: `R9` for `dihedral 9`, `T3` for `trivial 3`, the
/// file name for paths, the spec itself otherwise.
pub fn display_name(spec: &str) -> String {
    let spec = spec.trim();
    let path = Path::new(spec);
    if path.is_file() {
        return path.file_stem().map_or(spec.to_string(), |s| s.to_string_lossy().into_owned());
    }
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    match tokens.as_slice() {
        ["dihedral", n] => format!("R{n}"),
        ["trivial", n] => format!("T{n}"),
        ["alexander", g, m] => format!("Alex({g},{m})"),
        ["conj", rest @ ..] => format!("Conj({})", rest.join(" ")),
        _ => tokens.join(" "),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quandle_core::perm::DEFAULT_CAP;

    #[test]
    fn families() {
        assert_eq!(resolve_quandle("dihedral 9", DEFAULT_CAP).unwrap().order(), 9);
        assert_eq!(resolve_quandle("trivial 1", DEFAULT_CAP).unwrap().order(), 1);
        let alex = resolve_quandle("alexander z5 x2", DEFAULT_CAP).unwrap();
        assert!(alex.is_faithful());
        let m = resolve_quandle("alexander z3xz3 m0,-1;1,0", DEFAULT_CAP).unwrap();
        assert_eq!(m.order(), 9);
        let c = resolve_quandle("conj dihedral 9 reflections", DEFAULT_CAP).unwrap();
        assert_eq!(c.order(), 9);
        let p = resolve_genpair("genpair dihedral 9 reflections", DEFAULT_CAP).unwrap();
        assert_eq!(p.group().order(), 18);
        let inn = resolve_genpair("inn dihedral 3", DEFAULT_CAP).unwrap();
        assert_eq!(inn.group().order(), 6);
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(resolve("dihedral", DEFAULT_CAP), Err(SpecError::Invalid { .. })));
        assert!(matches!(resolve("dihedral x", DEFAULT_CAP), Err(SpecError::Invalid { .. })));
        assert!(matches!(resolve("octahedral 3", DEFAULT_CAP), Err(SpecError::Invalid { .. })));
        assert!(matches!(resolve("alexander z4 x2", DEFAULT_CAP), Err(SpecError::Core { .. })));
        assert!(resolve_quandle("genpair dihedral 3 reflections", DEFAULT_CAP).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(display_name("dihedral 9"), "R9");
        assert_eq!(display_name(" conj symmetric 3 all "), "Conj(symmetric 3 all)");
        assert_eq!(display_name("alexander z5 x2"), "Alex(z5,x2)");
    }
}
