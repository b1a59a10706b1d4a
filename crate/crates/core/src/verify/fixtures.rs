use serde::{Deserialize, Serialize};

use crate::anf::AnfTermSet;
use crate::error::Result;
use crate::truth_table::TruthTable;

/// Representatives with `nl2 = 16` (fun1..fun5) and `nl2 = 15`
/// (fun6..fun12), followed by the 18-class representative `g0`.
pub const REPRESENTATIVES: [(&str, &str); 13] = [
    ("fun1", "126+135+234"),
    ("fun2", "1234+126+145+235"),
    ("fun3", "1234+135+146+235+236+245"),
    ("fun4", "1236+1245+135+145+146+234"),
    ("fun5", "12345+135+146+235+236+245"),
    ("fun6", "123456+126+135+234"),
    ("fun7", "123456+1234+126+145+235+45"),
    ("fun8", "123456+1234+135+146+235+236+245"),
    ("fun9", "123456+1236+1245+135+145+146+234+46"),
    ("fun10", "123456+1234+134+156+234+236+245+34+36+45"),
    ("fun11", "123456+1236+1245+135+145+146+234+236+245+35+45+46"),
    ("fun12", "123456+2345+1256+1346+124+125+235+345+126+346"),
    ("g0", "123+145+246+356+456"),
];

/// A named 6-variable fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub id: String,
    pub anf: String,
}

impl Representative {
    pub fn table(&self) -> Result<TruthTable> {
        Ok(AnfTermSet::parse(6, &self.anf)?.to_truth_table())
    }
}

/// The fixture set used by a verification run; individual entries can be
/// replaced for negative controls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixtures {
    pub entries: Vec<Representative>,
}

impl Default for Fixtures {
    fn default() -> Self {
        Self {
            entries: REPRESENTATIVES
                .iter()
                .map(|(id, anf)| Representative {
                    id: id.to_string(),
                    anf: anf.to_string(),
                })
                .collect(),
        }
    }
}

impl Fixtures {
    pub fn get(&self, id: &str) -> Option<&Representative> {
        self.entries.iter().find(|r| r.id == id)
    }

    /// `fun{index}` for 1..=12.
    pub fn fun(&self, index: usize) -> Option<&Representative> {
        self.get(&format!("fun{index}"))
    }

    pub fn g0(&self) -> Option<&Representative> {
        self.get("g0")
    }

    /// Replaces the ANF of `id`; returns false if there is no such fixture.
    pub fn set(&mut self, id: &str, anf: &str) -> bool {
        match self.entries.iter_mut().find(|r| r.id == id) {
            Some(entry) => {
                entry.anf = anf.to_string();
                true
            }
            None => false,
        }
    }
}

/// Looks up a built-in fixture by name (`fun1`..`fun12`, `g0`).
pub fn named(name: &str) -> Option<TruthTable> {
    REPRESENTATIVES
        .iter()
        .find(|(id, _)| *id == name)
        .map(|(_, anf)| {
            AnfTermSet::parse(6, anf)
                .expect("built-in fixtures parse")
                .to_truth_table()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::degree;

    #[test]
    fn fixtures_parse_with_expected_degrees() {
        let degrees = [3, 4, 4, 4, 5, 6, 6, 6, 6, 6, 6, 6, 3];
        for ((id, anf), want) in REPRESENTATIVES.iter().zip(degrees) {
            let f = AnfTermSet::parse(6, anf).unwrap();
            assert_eq!(f.degree(), want, "{id}");
            assert_eq!(degree(&f.to_truth_table()), want);
        }
    }

    #[test]
    fn canonical_text_round_trips() {
        for (_, anf) in REPRESENTATIVES {
            let f = AnfTermSet::parse(6, anf).unwrap();
            let again = AnfTermSet::parse(6, &f.to_string()).unwrap();
            assert_eq!(again, f);
        }
    }

    #[test]
    fn override_entry() {
        let mut fx = Fixtures::default();
        assert!(fx.set("fun2", "126+135+234"));
        assert_eq!(fx.fun(2).unwrap().anf, "126+135+234");
        assert!(!fx.set("fun13", "0"));
        assert!(named("g0").is_some());
        assert!(named("nope").is_none());
    }
}
