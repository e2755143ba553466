//! Parsing of the encodings accepted on the command line.

use eo_core::catalog::{self, GroupSchemeName};
use eo_core::strata::{self, FinalType, YoungType};
use eo_core::weyl::{self, WeylElement, WeylWord};

/// A type given on the command line, resolved to its final type.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub final_type: FinalType,
    /// Set when the input was a name; otherwise filled in by classification.
    pub name: Option<GroupSchemeName>,
}

fn numbers(body: &str, open: char, close: char) -> Result<Vec<usize>, String> {
    let body = body.trim();
    let body = body.strip_prefix(open).unwrap_or(body);
    let body = body.strip_suffix(close).unwrap_or(body);
    body.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| format!("not a non-negative integer: {s:?}"))
        })
        .collect()
}

fn check_g(inferred: usize, given: Option<usize>) -> Result<usize, String> {
    match given {
        Some(g) if g != inferred => Err(format!("input has g = {inferred}, but -g {g} was given")),
        _ => Ok(inferred),
    }
}

fn require_g(given: Option<usize>, what: &str) -> Result<usize, String> {
    given.ok_or_else(|| format!("cannot infer g from {what}; pass -g"))
}

fn to_u32(v: Vec<usize>) -> Result<Vec<u32>, String> {
    v.into_iter()
        .map(|x| u32::try_from(x).map_err(|_| format!("value {x} is too large")))
        .collect()
}

fn from_weyl(w: &WeylElement) -> Result<FinalType, String> {
    let g = w.g();
    if g > crate::MAX_G {
        return Err(format!("g = {g} exceeds the limit {}", crate::MAX_G));
    }
    strata::enumerate_final_types(g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|t| &weyl::from_young(&t.to_young()) == w)
        .ok_or_else(|| format!("{w} is not the Weyl element of any Young type"))
}

/// Accepts `nu=[0,1,1]`, `mu={3,1}`, `omega=<3,1,4,2>`, `word=s2*s3` or a
/// name such as `L+I[2,1]`.
pub fn parse(input: &str, g: Option<usize>) -> Result<Resolved, String> {
    let input = input.trim();
    let (key, body) = match input.split_once('=') {
        Some((k, b)) => (k.trim(), b),
        None => ("", input),
    };
    let final_type = match key {
        "nu" => {
            let nu = to_u32(numbers(body, '[', ']')?)?;
            let g = check_g(nu.len(), g)?;
            FinalType::new(g, nu).map_err(|e| e.to_string())?
        }
        "mu" => {
            let mu = to_u32(numbers(body, '{', '}')?)?;
            let g = match (mu.first(), g) {
                (_, Some(g)) => g,
                (Some(&m), None) => m as usize,
                (None, None) => require_g(None, "the empty Young type")?,
            };
            YoungType::new(g, mu).map_err(|e| e.to_string())?.to_final()
        }
        "omega" => {
            let perm = numbers(body, '<', '>')?;
            if perm.len() % 2 == 1 {
                return Err("a Weyl element permutes an even number of points".into());
            }
            let g = check_g(perm.len() / 2, g)?;
            from_weyl(&WeylElement::from_oneline(g, perm).map_err(|e| e.to_string())?)?
        }
        "word" => {
            let g = require_g(g, "a word")?;
            if g > crate::MAX_G {
                return Err(format!("g = {g} exceeds the limit {}", crate::MAX_G));
            }
            let w = WeylWord::parse(g, body).map_err(|e| e.to_string())?;
            from_weyl(&weyl::evaluate_word(&w))?
        }
        "" => {
            let name = catalog::parse_name(input).map_err(|e| format!("{input}: {e}"))?;
            check_g(name.g(), g)?;
            let module = catalog::build_module(&name);
            let final_type = module.final_type().map_err(|e| e.to_string())?;
            return Ok(Resolved {
                final_type,
                name: Some(name),
            });
        }
        other => {
            return Err(format!(
                "unknown input kind {other:?}; use nu=, mu=, omega=, word= or a name"
            ))
        }
    };
    if final_type.g() > catalog::MAX_NAME_DIM {
        return Err(format!(
            "g = {} exceeds the limit {}",
            final_type.g(),
            catalog::MAX_NAME_DIM
        ));
    }
    let name = catalog::classify(&final_type).ok();
    Ok(Resolved { final_type, name })
}
