//! Variety specifications and their JSON form `{"family": …, "params": {…}}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

use super::formulas::ClassParams;
use super::index_set::ScrollSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarietySpec {
    /// Full Veronese variety of `P^dim` of the given order.
    Veronese { dim: u32, order: u32 },
    /// Rational normal scroll `S_a`.
    Scroll { a: ScrollSpec },
    /// Monomial variety of `A(ρ, χ)` over the scroll `a`.
    StandardScroll { a: ScrollSpec, rho: u32, chi: i64 },
    /// Monomial variety of the cone set `A(q)`.
    ConeStandard { r: u32, q: u32 },
    /// Order-`ρ` Veronese image of a quadric of the given rank in `P^{r+2}`.
    QuadricVeronese { r: u32, rho: u32, rank: u32 },
    /// `P¹ × Q` under Segre, `Q ⊂ P^{r+1}` a quadric of rank `μ`.
    SegreSpecial { r: u32, mu: u32 },
    /// `(t, t², t³, s, ts, t²s, q(s), t·q(s))` with `q` of rank `μ′`.
    CubicSpecial { r: u32, mu_prime: u32 },
    /// Veronese threefold of order 3, seen in `X_{3,6}(9)`.
    Veronese33,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    family: String,
    #[serde(default)]
    params: Value,
    #[serde(default)]
    class: Option<ClassParams>,
}

/// A spec file: the variety and, optionally, the class it is claimed to
/// belong to. Without a claim the family's own class is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub spec: VarietySpec,
    pub declared: Option<ClassParams>,
}

impl FromStr for SpecDocument {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let (spec, declared) = parse_document(&v)?;
        Ok(SpecDocument { spec, declared })
    }
}

impl SpecDocument {
    pub fn class(&self) -> ClassParams {
        self.declared.unwrap_or_else(|| self.spec.class())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VeroneseParams {
    dim: u32,
    order: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScrollParams {
    a: ScrollSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StandardParams {
    a: ScrollSpec,
    rho: u32,
    chi: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeParams {
    r: u32,
    q: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadricParams {
    r: u32,
    rho: u32,
    rank: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SegreParams {
    r: u32,
    mu: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CubicParams {
    r: u32,
    mu_prime: u32,
}

fn params<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_document(v: &Value) -> Result<(VarietySpec, Option<ClassParams>)> {
    let raw: RawSpec =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let p = raw.params;
    let spec = match raw.family.as_str() {
        "Veronese" => {
            let VeroneseParams { dim, order } = params(p)?;
            VarietySpec::Veronese { dim, order }
        }
        "Scroll" => VarietySpec::Scroll {
            a: params::<ScrollParams>(p)?.a,
        },
        "StandardScroll" => {
            let StandardParams { a, rho, chi } = params(p)?;
            VarietySpec::StandardScroll { a, rho, chi }
        }
        "ConeStandard" => {
            let ConeParams { r, q } = params(p)?;
            VarietySpec::ConeStandard { r, q }
        }
        "QuadricVeronese" => {
            let QuadricParams { r, rho, rank } = params(p)?;
            VarietySpec::QuadricVeronese { r, rho, rank }
        }
        "SegreSpecial" => {
            let SegreParams { r, mu } = params(p)?;
            VarietySpec::SegreSpecial { r, mu }
        }
        "CubicSpecial" => {
            let CubicParams { r, mu_prime } = params(p)?;
            VarietySpec::CubicSpecial { r, mu_prime }
        }
        "Veronese33" => {
            if !(p.is_null() || p.as_object().is_some_and(|o| o.is_empty())) {
                return Err(Error::Parse("Veronese33 takes no parameters".into()));
            }
            VarietySpec::Veronese33
        }
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    };
    spec.validate()?;
    if let Some(c) = raw.class {
        ClassParams::new(c.r, c.n, c.q)?;
    }
    Ok((spec, raw.class))
}

impl FromStr for VarietySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}

impl VarietySpec {
    pub fn from_json(v: &Value) -> Result<Self> {
        parse_document(v).map(|(spec, _)| spec)
    }

    pub fn to_json(&self) -> Value {
        let (family, params) = match self {
            VarietySpec::Veronese { dim, order } => {
                ("Veronese", json!({"dim": dim, "order": order}))
            }
            VarietySpec::Scroll { a } => ("Scroll", json!({"a": a})),
            VarietySpec::StandardScroll { a, rho, chi } => {
                ("StandardScroll", json!({"a": a, "rho": rho, "chi": chi}))
            }
            VarietySpec::ConeStandard { r, q } => ("ConeStandard", json!({"r": r, "q": q})),
            VarietySpec::QuadricVeronese { r, rho, rank } => {
                ("QuadricVeronese", json!({"r": r, "rho": rho, "rank": rank}))
            }
            VarietySpec::SegreSpecial { r, mu } => ("SegreSpecial", json!({"r": r, "mu": mu})),
            VarietySpec::CubicSpecial { r, mu_prime } => {
                ("CubicSpecial", json!({"r": r, "mu_prime": mu_prime}))
            }
            VarietySpec::Veronese33 => ("Veronese33", json!({})),
        };
        json!({"family": family, "params": params})
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        match self {
            VarietySpec::Veronese { dim, order } if *dim < 1 || *order < 1 => bad(format!(
                "Veronese needs dim ≥ 1 and order ≥ 1, got ({dim}, {order})"
            )),
            VarietySpec::StandardScroll { a, rho, chi } => {
                super::index_set::build_a(a, *rho, *chi).map(|_| ())
            }
            VarietySpec::ConeStandard { r, q } => {
                super::index_set::build_a_cone(*r, *q).map(|_| ())
            }
            VarietySpec::QuadricVeronese { r, rho, rank } => {
                if *rho < 1 {
                    bad("QuadricVeronese needs ρ ≥ 1".into())
                } else if *rank < 5 || *rank > r + 3 {
                    bad(format!(
                        "QuadricVeronese rank {rank} outside [5, {}]",
                        r + 3
                    ))
                } else {
                    Ok(())
                }
            }
            VarietySpec::SegreSpecial { r, mu } if *r < 1 || *mu < 3 || *mu > r + 2 => bad(
                format!("SegreSpecial needs 3 ≤ μ ≤ r + 2, got (r, μ) = ({r}, {mu})"),
            ),
            VarietySpec::CubicSpecial { r, mu_prime }
                if *r < 1 || *mu_prime < 1 || *mu_prime > *r =>
            {
                bad(format!(
                    "CubicSpecial needs 1 ≤ μ′ ≤ r, got (r, μ′) = ({r}, {mu_prime})"
                ))
            }
            _ => Ok(()),
        }
    }

    /// The class `X_{r+1,n}(q)` the family belongs to.
    pub fn class(&self) -> ClassParams {
        let (r, n, q) = match self {
            VarietySpec::Veronese { dim, order } => (dim - 1, 2, *order),
            VarietySpec::Scroll { a } => (a.r(), a.n(), a.n() - 1),
            VarietySpec::StandardScroll { a, rho, chi } => (
                a.r(),
                a.n(),
                (*rho as i64 * (a.n() as i64 - 1) + chi) as u32,
            ),
            VarietySpec::ConeStandard { r, q } => (*r, 5, *q),
            VarietySpec::QuadricVeronese { r, rho, .. } => (*r, 3, 2 * rho),
            VarietySpec::SegreSpecial { r, .. } => (*r, 3, 3),
            VarietySpec::CubicSpecial { r, .. } => (*r, 4, 5),
            VarietySpec::Veronese33 => (2, 6, 9),
        };
        ClassParams { r, n, q }
    }

    pub fn family(&self) -> &'static str {
        match self {
            VarietySpec::Veronese { .. } => "Veronese",
            VarietySpec::Scroll { .. } => "Scroll",
            VarietySpec::StandardScroll { .. } => "StandardScroll",
            VarietySpec::ConeStandard { .. } => "ConeStandard",
            VarietySpec::QuadricVeronese { .. } => "QuadricVeronese",
            VarietySpec::SegreSpecial { .. } => "SegreSpecial",
            VarietySpec::CubicSpecial { .. } => "CubicSpecial",
            VarietySpec::Veronese33 => "Veronese33",
        }
    }

    /// Number of affine chart parameters, i.e. `r + 1`.
    pub fn param_dim(&self) -> usize {
        self.class().r as usize + 1
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietySpec::Veronese { dim, order } => write!(f, "Veronese({dim},{order})"),
            VarietySpec::Scroll { a } => write!(f, "Scroll({:?})", a.degrees()),
            VarietySpec::StandardScroll { a, rho, chi } => {
                write!(f, "StandardScroll({:?},{rho},{chi})", a.degrees())
            }
            VarietySpec::ConeStandard { r, q } => write!(f, "ConeStandard({r},{q})"),
            VarietySpec::QuadricVeronese { r, rho, rank } => {
                write!(f, "QuadricVeronese({r},{rho},{rank})")
            }
            VarietySpec::SegreSpecial { r, mu } => write!(f, "SegreSpecial({r},{mu})"),
            VarietySpec::CubicSpecial { r, mu_prime } => write!(f, "CubicSpecial({r},{mu_prime})"),
            VarietySpec::Veronese33 => write!(f, "Veronese33"),
        }
    }
}

impl Serialize for VarietySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let specs = [
            VarietySpec::Veronese { dim: 2, order: 3 },
            VarietySpec::StandardScroll {
                a: ScrollSpec::new(vec![2, 1, 1]).unwrap(),
                rho: 1,
                chi: 1,
            },
            VarietySpec::SegreSpecial { r: 2, mu: 4 },
            VarietySpec::Veronese33,
        ];
        for s in specs {
            assert_eq!(VarietySpec::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(VarietySpec::from_str("{\"family\": \"Nope\"}").is_err());
        assert!(
            VarietySpec::from_str("{\"family\": \"Veronese\", \"params\": {\"dim\": 2}}").is_err()
        );
        assert!(VarietySpec::from_str("not json").is_err());
        assert!(VarietySpec::from_str(
            "{\"family\": \"SegreSpecial\", \"params\": {\"r\": 2, \"mu\": 2}}"
        )
        .is_err());
        assert!(
            VarietySpec::from_str("{\"family\": \"Scroll\", \"params\": {\"a\": [1, 2]}}").is_err()
        );
    }

    #[test]
    fn classes() {
        let s = VarietySpec::StandardScroll {
            a: ScrollSpec::new(vec![2, 1, 1]).unwrap(),
            rho: 1,
            chi: 1,
        };
        assert_eq!(s.class(), ClassParams { r: 2, n: 5, q: 5 });
        assert_eq!(
            VarietySpec::CubicSpecial { r: 2, mu_prime: 2 }.class(),
            ClassParams { r: 2, n: 4, q: 5 }
        );
    }
}
