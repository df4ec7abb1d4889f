use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::family::{Family, SetWord};

use super::{design10, design10_lift, f23, fano, fano_lift, lift, star, triangle};

/// The generators shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedConstruction {
    Star,
    F23,
    Fano,
    FanoLift,
    Design10,
    Design10Lift,
    Triangle,
    Lift,
}

impl NamedConstruction {
    pub const ALL: [NamedConstruction; 8] = [
        NamedConstruction::Star,
        NamedConstruction::F23,
        NamedConstruction::Fano,
        NamedConstruction::FanoLift,
        NamedConstruction::Design10,
        NamedConstruction::Design10Lift,
        NamedConstruction::Triangle,
        NamedConstruction::Lift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedConstruction::Star => "star",
            NamedConstruction::F23 => "f23",
            NamedConstruction::Fano => "fano",
            NamedConstruction::FanoLift => "fano_lift",
            NamedConstruction::Design10 => "design10",
            NamedConstruction::Design10Lift => "design10_lift",
            NamedConstruction::Triangle => "triangle",
            NamedConstruction::Lift => "lift",
        }
    }
}

/// Parameters a construction may read. Unused fields are ignored; a
/// construction that needs a missing field reports `BadParams`.
#[derive(Clone, Debug, Default)]
pub struct ConstructionParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    /// 1-indexed generator sets (star uses the first one).
    pub generators: Option<Vec<Vec<usize>>>,
}

impl ConstructionParams {
    pub fn new(n: usize, k: usize) -> Self {
        ConstructionParams { n: Some(n), k: Some(k), generators: None }
    }

    fn require_nk(&self, name: &str) -> Result<(usize, usize)> {
        match (self.n, self.k) {
            (Some(n), Some(k)) => Ok((n, k)),
            _ => Err(bad(name, "--n and --k are required")),
        }
    }

    fn generator_words(&self, name: &str, n: usize) -> Result<Option<Vec<SetWord>>> {
        self.generators
            .as_ref()
            .map(|g| g.iter().map(|s| SetWord::from_elements(s, n)).collect::<Result<Vec<_>>>())
            .transpose()
            .map_err(|e| bad(name, &e.to_string()))
    }
}

fn bad(name: &str, reason: &str) -> Error {
    Error::BadParams { name: name.to_string(), reason: reason.to_string() }
}

/// A named family generator.
pub trait Construction: Send + Sync {
    fn kind(&self) -> NamedConstruction;

    fn name(&self) -> &'static str {
        self.kind().name()
    }

    fn description(&self) -> &'static str;

    fn build(&self, params: &ConstructionParams) -> Result<Family>;
}

/// Embeds a fixed family into `--n` when given and checks any `--k` against its uniformity.
fn fixed(name: &str, f: Family, params: &ConstructionParams) -> Result<Family> {
    if let Some(k) = params.k {
        if k != f.k() {
            return Err(bad(name, &format!("this family is {}-uniform, got --k {k}", f.k())));
        }
    }
    match params.n {
        Some(n) if n < f.n() => Err(bad(name, &format!("needs n >= {}", f.n()))),
        Some(n) => f.embed(n),
        None => Ok(f),
    }
}

struct Builtin(NamedConstruction);

impl Construction for Builtin {
    fn kind(&self) -> NamedConstruction {
        self.0
    }

    fn description(&self) -> &'static str {
        match self.0 {
            NamedConstruction::Star => "all k-sets containing a generator (default {1})",
            NamedConstruction::F23 => "all k-sets meeting [3] in at least two elements",
            NamedConstruction::Fano => "the seven lines of the Fano plane",
            NamedConstruction::FanoLift => "all k-sets containing a Fano line",
            NamedConstruction::Design10 => "ten triples of [6], one per complementary pair",
            NamedConstruction::Design10Lift => "all k-sets containing a design10 triple",
            NamedConstruction::Triangle => "the three pairs of [3]",
            NamedConstruction::Lift => "all k-sets containing one of the given generators",
        }
    }

    fn build(&self, params: &ConstructionParams) -> Result<Family> {
        let name = self.name();
        match self.0 {
            NamedConstruction::Star => {
                let (n, k) = params.require_nk(name)?;
                let centre = match params.generator_words(name, n)? {
                    Some(g) => *g.first().ok_or_else(|| bad(name, "empty generator list"))?,
                    None => SetWord::from_elements(&[1], n)?,
                };
                star(centre, n, k)
            }
            NamedConstruction::F23 => {
                let (n, k) = params.require_nk(name)?;
                f23(n, k)
            }
            NamedConstruction::Fano => fixed(name, fano(), params),
            NamedConstruction::FanoLift => {
                let (n, k) = params.require_nk(name)?;
                fano_lift(n, k)
            }
            NamedConstruction::Design10 => fixed(name, design10(), params),
            NamedConstruction::Design10Lift => {
                let (n, k) = params.require_nk(name)?;
                design10_lift(n, k)
            }
            NamedConstruction::Triangle => {
                let f = Family::from_words(3, 2, triangle().iter().map(|t| t.bits()))?;
                fixed(name, f, params)
            }
            NamedConstruction::Lift => {
                let (n, k) = params.require_nk(name)?;
                let gens = params
                    .generator_words(name, n)?
                    .ok_or_else(|| bad(name, "--generators is required"))?;
                lift(&gens, n, k)
            }
        }
    }
}

/// Name-keyed constructions; `-` and `_` are interchangeable in lookups.
#[derive(Clone)]
pub struct ConstructionRegistry {
    entries: BTreeMap<&'static str, Arc<dyn Construction>>,
}

impl ConstructionRegistry {
    pub fn builtin() -> Self {
        let mut r = ConstructionRegistry { entries: BTreeMap::new() };
        for kind in NamedConstruction::ALL {
            r.register(Arc::new(Builtin(kind)));
        }
        r
    }

    pub fn register(&mut self, c: Arc<dyn Construction>) {
        self.entries.insert(c.name(), c);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Construction>> {
        let key = name.replace('-', "_");
        self.entries.get(key.as_str()).cloned().ok_or_else(|| Error::UnknownName {
            kind: "construction",
            name: name.to_string(),
            available: self.names().join(", "),
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn Construction>> {
        self.entries.values()
    }
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_is_intersecting_and_uniform() {
        let reg = ConstructionRegistry::builtin();
        let params = ConstructionParams {
            n: Some(9),
            k: None,
            generators: Some(vec![vec![1, 2], vec![1, 3], vec![2, 3]]),
        };
        for c in reg.iter() {
            let mut p = params.clone();
            p.k = Some(match c.kind() {
                NamedConstruction::Triangle => 2,
                NamedConstruction::Fano | NamedConstruction::Design10 => 3,
                _ => 4,
            });
            let f = c.build(&p).unwrap_or_else(|e| panic!("{}: {e}", c.name()));
            assert!(f.is_intersecting(), "{}", c.name());
            assert!(f.words().iter().all(|w| w.count_ones() as usize == f.k()));
            assert_eq!(f.n(), 9);
        }
    }

    #[test]
    fn lookup_and_errors() {
        let reg = ConstructionRegistry::builtin();
        assert_eq!(reg.names().len(), 8);
        assert!(reg.get("fano-lift").is_ok());
        assert!(matches!(reg.get("petersen"), Err(Error::UnknownName { .. })));
        let lift = reg.get("lift").unwrap();
        assert!(matches!(lift.build(&ConstructionParams::new(6, 3)), Err(Error::BadParams { .. })));
        let fano = reg.get("fano").unwrap();
        assert_eq!(fano.build(&ConstructionParams::default()).unwrap().n(), 7);
        assert!(fano.build(&ConstructionParams::new(7, 4)).is_err());
    }
}
