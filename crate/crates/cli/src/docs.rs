//! Document formats: polymatroid documents, realization matrices, relation
//! lists, subset strings, and sequence flags.
//!
//! Subsets are written as sorted element-name lists joined by commas inside
//! braces, `{}` for the empty set. Dense rank arrays are in little-endian
//! bitmask order (bit 0 is the first element). Rationals serialize as `p/q`.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use polymat::{GroundData, Polymatroid, Subset};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolymatroidDoc {
    pub elements: Vec<String>,
    #[serde(rename = "type")]
    pub type_vec: Vec<u32>,
    pub rank: RankRepr,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RankRepr {
    Dense(Vec<i64>),
    Sparse(BTreeMap<String, i64>),
}

#[derive(Clone, Debug, Deserialize)]
pub struct MatrixDoc {
    pub blocks: Vec<u32>,
    pub rows: Vec<Vec<RationalEntry>>,
    #[serde(default)]
    pub elements: Option<Vec<String>>,
}

/// An integer or a `p/q` string.
#[derive(Clone, Debug)]
pub struct RationalEntry(pub num_bigint::BigInt, pub num_bigint::BigInt);

impl<'de> Deserialize<'de> for RationalEntry {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        let one = num_bigint::BigInt::from(1);
        match Raw::deserialize(de)? {
            Raw::Int(v) => Ok(RationalEntry(v.into(), one)),
            Raw::Text(s) => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s.as_str(), "1"),
                };
                let num = num.trim().parse().map_err(D::Error::custom)?;
                let den: num_bigint::BigInt = den.trim().parse().map_err(D::Error::custom)?;
                if den == num_bigint::BigInt::from(0) {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(RationalEntry(num, den))
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct RelationDoc {
    pub terms: Vec<RelationTerm>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub polymatroid: PolymatroidDoc,
}

/// Element names plus the validated polymatroid they describe.
pub struct NamedPolymatroid {
    pub names: Vec<String>,
    pub value: Polymatroid,
}

/// Malformed input versus a well-formed document that fails a domain check;
/// the two map to different exit codes.
#[derive(Debug)]
pub enum DocError {
    Parse(String),
    Domain(polymat::CoreError),
}

impl From<String> for DocError {
    fn from(msg: String) -> DocError {
        DocError::Parse(msg)
    }
}

impl From<polymat::CoreError> for DocError {
    fn from(err: polymat::CoreError) -> DocError {
        DocError::Domain(err)
    }
}

pub fn check_names(names: &[String]) -> Result<(), String> {
    for name in names {
        if name.is_empty() || name.contains(['{', '}', ',']) {
            return Err(format!("invalid element name {name:?}"));
        }
    }
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != names.len() {
        return Err("element names must be unique".into());
    }
    Ok(())
}

pub fn parse_subset(text: &str, names: &[String]) -> Result<Subset, String> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| format!("subset {text:?} is not brace-delimited"))?;
    let mut out = Subset::EMPTY;
    if inner.trim().is_empty() {
        return Ok(out);
    }
    for part in inner.split(',') {
        let name = part.trim();
        let at = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| format!("unknown element {name:?}"))?;
        out = out.insert(at);
    }
    Ok(out)
}

pub fn subset_string(s: Subset, names: &[String]) -> String {
    let mut picked: Vec<&str> = s.iter().map(|i| names[i].as_str()).collect();
    picked.sort();
    format!("{{{}}}", picked.join(","))
}

/// A sequence flag like `{1},{1,2},{}` is a comma-joined list of subset
/// strings; the empty string is the empty sequence.
pub fn parse_sequence(text: &str, names: &[String]) -> Result<Vec<Subset>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut rest = trimmed;
    loop {
        if !rest.starts_with('{') {
            return Err(format!("expected '{{' at {rest:?}"));
        }
        let close = rest.find('}').ok_or_else(|| format!("unclosed subset in {text:?}"))?;
        out.push(parse_subset(&rest[..=close], names)?);
        rest = &rest[close + 1..];
        if rest.is_empty() {
            return Ok(out);
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| format!("expected ',' between subsets in {text:?}"))?;
    }
}

pub fn parse_polymatroid(doc: &PolymatroidDoc, cap: usize) -> Result<NamedPolymatroid, DocError> {
    check_names(&doc.elements)?;
    if doc.elements.len() != doc.type_vec.len() {
        return Err(DocError::Parse("elements and type have different lengths".into()));
    }
    let ground = GroundData::with_cap(doc.type_vec.clone(), cap)?;
    let m = ground.m();
    let table: Vec<i64> = match &doc.rank {
        RankRepr::Dense(values) => values.clone(),
        RankRepr::Sparse(map) => {
            let mut table = vec![i64::MIN; 1 << m];
            for (key, &value) in map {
                let s = parse_subset(key, &doc.elements)?;
                table[s.index()] = value;
            }
            if let Some(bits) = table.iter().position(|&v| v == i64::MIN) {
                return Err(DocError::Parse(format!(
                    "rank map is missing subset {}",
                    subset_string(Subset(bits as u32), &doc.elements)
                )));
            }
            table
        }
    };
    let value = Polymatroid::validate(ground, &table)?;
    Ok(NamedPolymatroid { names: doc.elements.clone(), value })
}

pub fn doc_of(names: &[String], p: &Polymatroid) -> PolymatroidDoc {
    PolymatroidDoc {
        elements: names.to_vec(),
        type_vec: p.ground().type_vector().to_vec(),
        rank: RankRepr::Dense(p.table().iter().map(|&v| v as i64).collect()),
    }
}

/// Names for the blown-up ground set: singleton fibers keep the base name,
/// larger fibers append letters, with extra letters on collision.
pub fn lifted_names(names: &[String], type_vec: &[u32]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for (name, &size) in names.iter().zip(type_vec) {
        for k in 0..size {
            let mut candidate = if size == 1 {
                name.clone()
            } else {
                format!("{name}{}", letter(k))
            };
            while out.contains(&candidate) {
                candidate.push(letter(k));
            }
            out.push(candidate);
        }
    }
    out
}

fn letter(k: u32) -> char {
    char::from(b'a' + (k % 26) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn subset_round_trip() {
        let ns = names(&["1", "2"]);
        assert_eq!(parse_subset("{1,2}", &ns).unwrap(), Subset(0b11));
        assert_eq!(parse_subset("{}", &ns).unwrap(), Subset::EMPTY);
        assert_eq!(subset_string(Subset(0b10), &ns), "{2}");
        assert!(parse_subset("{3}", &ns).is_err());
    }

    #[test]
    fn sequence_parsing() {
        let ns = names(&["1", "2"]);
        assert_eq!(
            parse_sequence("{1},{1,2}", &ns).unwrap(),
            vec![Subset(0b01), Subset(0b11)]
        );
        assert_eq!(parse_sequence("", &ns).unwrap(), vec![]);
        assert!(parse_sequence("{1}{2}", &ns).is_err());
    }

    #[test]
    fn sparse_rank_maps_parse() {
        let doc = PolymatroidDoc {
            elements: names(&["1", "2"]),
            type_vec: vec![2, 1],
            rank: RankRepr::Sparse(
                [("{}", 0i64), ("{1}", 2), ("{2}", 1), ("{1,2}", 2)]
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
            ),
        };
        let parsed = parse_polymatroid(&doc, 12).unwrap();
        assert_eq!(parsed.value.table(), &[0, 2, 1, 2]);
    }

    #[test]
    fn lifted_name_scheme() {
        assert_eq!(lifted_names(&names(&["1", "2"]), &[2, 1]), names(&["1a", "1b", "2"]));
        assert_eq!(lifted_names(&names(&["x"]), &[3]), names(&["xa", "xb", "xc"]));
    }
}
