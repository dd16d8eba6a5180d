//! Vertex colorings with small non-negative integer colors.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A total coloring of vertices `0..n`. The palette size is the number of
/// distinct colors actually used.
///
/// Serializes as `{"n": <count>, "colors": [c0, c1, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        let mut distinct: Vec<usize> = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len()
    }

    /// Color classes keyed by color, each class sorted ascending.
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            map.entry(c).or_default().push(v);
        }
        map
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringWire {
    n: usize,
    colors: Vec<usize>,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ColoringWire { n: self.colors.len(), colors: self.colors.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = ColoringWire::deserialize(deserializer)?;
        if wire.n != wire.colors.len() {
            return Err(D::Error::custom(format!(
                "coloring declares n = {} but lists {} colors",
                wire.n,
                wire.colors.len()
            )));
        }
        Ok(Coloring { colors: wire.colors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_counts_distinct_colors() {
        let c = Coloring::new(vec![0, 2, 0, 2, 5]);
        assert_eq!(c.palette_size(), 3);
        assert_eq!(c.classes()[&0], vec![0, 2]);
    }

    #[test]
    fn json_round_trip() {
        let c = Coloring::new(vec![1, 0, 1]);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"n":3,"colors":[1,0,1]}"#);
        let back: Coloring = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn json_rejects_mismatched_count() {
        let r: Result<Coloring, _> = serde_json::from_str(r#"{"n":2,"colors":[0,1,2]}"#);
        assert!(r.is_err());
    }
}
