//! JSON report schemas emitted by `--json`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_lattice::{format_rational, FiniteAbelianGroup, IntMatrix, Rational};

/// An integer that serializes as a JSON number when it fits in `i64` and as
/// a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(JsonInt(x.into())),
            Repr::Text(t) => t.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

pub fn ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

pub fn matrix(m: &IntMatrix) -> Vec<Vec<JsonInt>> {
    (0..m.rows()).map(|i| ints(m.row(i))).collect()
}

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn factors(g: &FiniteAbelianGroup) -> Vec<JsonInt> {
    ints(g.invariant_factors())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidateReport {
    pub dim: usize,
    pub facets: usize,
    pub labels: Vec<u64>,
    pub vertices: Vec<Vec<String>>,
    pub f_vector: Vec<usize>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceRecord {
    pub active: Vec<usize>,
    pub vertices: Vec<usize>,
    pub codim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRecord {
    pub face: Vec<usize>,
    pub invariant_factors: Vec<JsonInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymplecticComparison {
    pub isomorphic: bool,
    pub translation: Option<Vec<String>>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiholomorphicComparison {
    pub fans_equal: bool,
    pub symplectomorphic: bool,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DelzantReport {
    pub projection: Vec<Vec<JsonInt>>,
    pub kernel_basis: Vec<Vec<JsonInt>>,
    pub level: Vec<String>,
    pub component_group: Vec<JsonInt>,
    pub stabilizers: Vec<GroupRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilizerRecord {
    pub face: Vec<usize>,
    pub invariant_factors: Vec<JsonInt>,
    pub structure_group: Vec<JsonInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilizerReport {
    pub stabilizers: Vec<StabilizerRecord>,
    pub oracles_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyReport {
    pub passed: bool,
    pub samples: usize,
    pub vertices_attained: usize,
    pub vertex_count: usize,
    pub level: Vec<String>,
    pub regular: bool,
    pub max_stabilizer_order: JsonInt,
    pub counterexample: Option<String>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_fall_back_to_strings() {
        let big = JsonInt(BigInt::from(i64::MAX) * 4);
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(text, "\"36893488147419103228\"");
        assert_eq!(serde_json::from_str::<JsonInt>(&text).unwrap(), big);
        assert_eq!(serde_json::to_string(&JsonInt(BigInt::from(-3))).unwrap(), "-3");
    }
}
