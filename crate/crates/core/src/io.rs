//! On-disk formats.
//!
//! Family JSON is `{"n": 7, "k": 3, "sets": [[1,2,3], ...]}` with 1-indexed,
//! ascending elements and sets in canonical (ascending word) order. The text
//! format is a header line `n k` followed by one comma-separated set per line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{make_family, Family};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FamilyJson {
    pub n: usize,
    pub k: usize,
    pub sets: Vec<Vec<usize>>,
}

impl From<&Family> for FamilyJson {
    fn from(f: &Family) -> Self {
        FamilyJson { n: f.n(), k: f.k(), sets: f.to_lists() }
    }
}

impl TryFrom<FamilyJson> for Family {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Family> {
        make_family(j.n, j.k, &j.sets)
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FamilyJson::deserialize(d)?;
        Family::try_from(j).map_err(serde::de::Error::custom)
    }
}

pub fn family_to_json(f: &Family) -> String {
    serde_json::to_string(f).expect("family serializes")
}

pub fn family_from_json(s: &str) -> Result<Family> {
    let j: FamilyJson = serde_json::from_str(s)?;
    Family::try_from(j)
}

pub fn family_to_text(f: &Family) -> String {
    let mut out = format!("{} {}\n", f.n(), f.k());
    for set in f.to_lists() {
        let line: Vec<String> = set.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn family_from_text(s: &str) -> Result<Family> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("missing 'n k' header".into()))?;
    let mut head = header.split_whitespace().map(parse_usize);
    let (n, k) = match (head.next(), head.next(), head.next()) {
        (Some(n), Some(k), None) => (n?, k?),
        _ => return Err(Error::Parse(format!("bad header line '{header}', expected 'n k'"))),
    };
    let sets = lines
        .map(|l| {
            if l == "-" {
                // a lone dash spells the empty set when k = 0
                Ok(Vec::new())
            } else {
                l.split(',').map(|t| parse_usize(t.trim())).collect::<Result<Vec<_>>>()
            }
        })
        .collect::<Result<Vec<_>>>()?;
    make_family(n, k, &sets)
}

/// Reads either format, sniffing JSON by a leading `{`.
pub fn family_from_str(s: &str) -> Result<Family> {
    if s.trim_start().starts_with('{') {
        family_from_json(s)
    } else {
        family_from_text(s)
    }
}

pub fn read_family(path: &std::path::Path) -> Result<Family> {
    let s = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    family_from_str(&s)
}

/// Reads a list of generator sets (any sizes): `{"sets": [[..]..]}`, a bare `[[..]..]`, or text lines.
pub fn generators_from_str(s: &str) -> Result<Vec<Vec<usize>>> {
    let t = s.trim_start();
    if t.starts_with('[') {
        Ok(serde_json::from_str(t)?)
    } else if t.starts_with('{') {
        #[derive(Deserialize)]
        struct Gens {
            sets: Vec<Vec<usize>>,
        }
        Ok(serde_json::from_str::<Gens>(t)?.sets)
    } else {
        t.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split(',').map(|x| parse_usize(x.trim())).collect())
            .collect()
    }
}

fn parse_usize(t: &str) -> Result<usize> {
    t.parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, found '{t}'")))
}
