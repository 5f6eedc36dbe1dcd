//! The polytope file format:
//!
//! ```json
//! { "dim": 2,
//!   "halfspaces": [ { "normal": [1, 0], "offset": "0", "label": 1 }, … ] }
//! ```
//!
//! Offsets are rationals written `"p/q"` or `"p"`; bare JSON integers are
//! accepted on input as well.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{LabeledPolytope, RawHalfSpace};
use crate::error::{Error, Result};
use crate::exact_lattice::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub dim: usize,
    pub halfspaces: Vec<HalfSpaceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfSpaceRecord {
    pub normal: Vec<i64>,
    pub offset: OffsetField,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OffsetField {
    Text(String),
    Integer(i64),
}

impl OffsetField {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            OffsetField::Text(s) => parse_rational(s),
            OffsetField::Integer(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

impl PolytopeFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn raw_halfspaces(&self) -> Result<Vec<RawHalfSpace>> {
        self.halfspaces
            .iter()
            .map(|h| {
                Ok(RawHalfSpace {
                    normal: h.normal.iter().map(|&x| BigInt::from(x)).collect(),
                    offset: h.offset.to_rational()?,
                    label: h.label,
                })
            })
            .collect()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl LabeledPolytope {
    /// Parses and validates a polytope file. Malformed JSON and bad rationals
    /// surface as [`Error::Parse`] / [`Error::ParseRational`]; geometric
    /// problems as the validation errors.
    pub fn from_json(text: &str) -> Result<Self> {
        let file = PolytopeFile::parse(text)?;
        LabeledPolytope::new(file.dim, file.raw_halfspaces()?)
    }

    /// The canonical file form (primitive normals, reduced offsets).
    pub fn to_file(&self) -> PolytopeFile {
        PolytopeFile {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| HalfSpaceRecord {
                    normal: h.normal.iter().map(|x| x.to_i64().expect("normal entry fits in i64")).collect(),
                    offset: OffsetField::Text(format_rational(&h.offset)),
                    label: h.label as i64,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json_pretty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_lattice::rational;

    const FOOTBALL: &str = r#"{ "dim": 1, "halfspaces": [
        { "normal": [1], "offset": "0", "label": 3 },
        { "normal": [-1], "offset": "-1", "label": 5 } ] }"#;

    #[test]
    fn parses_football() {
        let p = LabeledPolytope::from_json(FOOTBALL).unwrap();
        assert_eq!(p.labels(), vec![3, 5]);
        assert_eq!(p.halfspace(1).offset, rational(-1, 1));
    }

    #[test]
    fn round_trips_through_canonical_form() {
        let p = LabeledPolytope::from_json(FOOTBALL).unwrap();
        let again = LabeledPolytope::from_json(&p.to_json()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn integer_and_fractional_offsets() {
        let text = r#"{"dim":1,"halfspaces":[{"normal":[2],"offset":1,"label":1},
                       {"normal":[-1],"offset":"-7/2","label":1}]}"#;
        let p = LabeledPolytope::from_json(text).unwrap();
        assert_eq!(p.halfspace(0).offset, rational(1, 2));
        assert_eq!(p.enumerate_vertices(), vec![vec![rational(1, 2)], vec![rational(7, 2)]]);
        assert_eq!(p.warnings().len(), 1);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(LabeledPolytope::from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(LabeledPolytope::from_json(r#"{"dim":1}"#), Err(Error::Parse(_))));
        let bad_offset = r#"{"dim":1,"halfspaces":[{"normal":[1],"offset":"a/b","label":1}]}"#;
        assert!(matches!(LabeledPolytope::from_json(bad_offset), Err(Error::ParseRational(_))));
        let short = r#"{"dim":2,"halfspaces":[{"normal":[1],"offset":"0","label":1}]}"#;
        assert!(matches!(LabeledPolytope::from_json(short), Err(Error::BadHalfSpace { index: 0, .. })));
    }
}
