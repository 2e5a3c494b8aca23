//! JSON forms of computed modules.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gradedroot::HFPlusModule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub bottom: i64,
    pub length: i64,
    pub mult: u64,
}

/// `{"manifold":"-Sigma(2,7,17)","d":0,"towers":[...],"odd_rank":0}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub manifold: String,
    pub d: i64,
    pub towers: Vec<TowerJson>,
    pub odd_rank: u64,
}

impl ModuleJson {
    pub fn new(manifold: &str, m: &HFPlusModule) -> Self {
        Self {
            manifold: manifold.to_string(),
            d: m.d,
            towers: m
                .towers()
                .map(|(t, mult)| TowerJson {
                    bottom: t.bottom,
                    length: t.length,
                    mult,
                })
                .collect(),
            odd_rank: m.odd_rank(),
        }
    }

    pub fn module(&self) -> Result<HFPlusModule> {
        if self.odd_rank != 0 {
            return Err(Error::MalformedInput(format!(
                "odd_rank {} is not supported",
                self.odd_rank
            )));
        }
        if self.d % 2 != 0 {
            return Err(Error::MalformedInput(format!("d = {} is odd", self.d)));
        }
        let mut m = HFPlusModule::new(self.d);
        for t in &self.towers {
            if t.length < 1 || t.mult < 1 || t.bottom % 2 != 0 {
                return Err(Error::MalformedInput(format!("bad tower {t:?}")));
            }
            m.add(t.bottom, t.length, t.mult);
        }
        Ok(m)
    }
}

pub fn module_to_json(manifold: &str, m: &HFPlusModule) -> String {
    serde_json::to_string(&ModuleJson::new(manifold, m)).expect("module serializes")
}

pub fn module_from_json(s: &str) -> Result<(String, HFPlusModule)> {
    let j: ModuleJson = serde_json::from_str(s).map_err(|e| Error::Parse(format!("json: {e}")))?;
    let m = j.module()?;
    Ok((j.manifold, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema() {
        let m = HFPlusModule::new(0)
            .with(0, 1, 3)
            .with(2, 1, 2)
            .with(6, 1, 2);
        let s = module_to_json("-Sigma(2,7,17)", &m);
        assert_eq!(
            s,
            r#"{"manifold":"-Sigma(2,7,17)","d":0,"towers":[{"bottom":0,"length":1,"mult":3},{"bottom":2,"length":1,"mult":2},{"bottom":6,"length":1,"mult":2}],"odd_rank":0}"#
        );
        let (name, back) = module_from_json(&s).unwrap();
        assert_eq!(name, "-Sigma(2,7,17)");
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_bad_json() {
        assert!(module_from_json("{").is_err());
        assert!(module_from_json(r#"{"manifold":"x","d":1,"towers":[],"odd_rank":0}"#).is_err());
        assert!(module_from_json(r#"{"manifold":"x","d":0,"towers":[],"odd_rank":1}"#).is_err());
        assert!(module_from_json(
            r#"{"manifold":"x","d":0,"towers":[{"bottom":0,"length":0,"mult":1}],"odd_rank":0}"#
        )
        .is_err());
    }
}
