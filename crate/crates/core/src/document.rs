//! Serializable antichain certificates: the JSON schema used by the CLI and
//! a plain text form with one set per line.

use serde::{Deserialize, Serialize};

use crate::antichain::FlatAntichain;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::mask::SubsetMask;
use crate::planner::TraceStep;

/// On-disk form of a flat antichain. `sets` is ordered by cardinality and
/// then colexicographically; `size` always equals the number of sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntichainDocument {
    pub n: u32,
    pub levels: [u32; 2],
    pub size: u64,
    pub sets: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
}

impl AntichainDocument {
    pub fn from_antichain(a: &FlatAntichain, trace: Option<&[TraceStep]>) -> Self {
        let mut sets: Vec<Vec<u32>> =
            a.lower().members().iter().map(|m| m.elements()).collect();
        sets.extend(a.upper().members().iter().map(|m| m.elements()));
        AntichainDocument {
            n: a.n(),
            levels: [a.lower_level(), a.lower_level() + 1],
            size: a.size(),
            sets,
            trace: trace.map(|t| t.to_vec()),
        }
    }

    pub fn to_antichain(&self) -> Result<FlatAntichain> {
        let [l, l1] = self.levels;
        if l1 != l + 1 {
            return Err(Error::LevelRange { n: self.n, l });
        }
        if self.size != self.sets.len() as u64 {
            return Err(Error::VerificationFailed(format!(
                "declared size {} but {} sets listed",
                self.size,
                self.sets.len()
            )));
        }
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for set in &self.sets {
            let mask = SubsetMask::from_elements(set, self.n)?;
            if mask.card() as usize != set.len() {
                return Err(Error::VerificationFailed("duplicate elements in a set".into()));
            }
            if mask.card() == l {
                lower.push(mask);
            } else if mask.card() == l + 1 {
                upper.push(mask);
            } else {
                return Err(Error::BadFamily { expected: l, found: mask.card() });
            }
        }
        FlatAntichain::new(
            self.n,
            l,
            Family::new(self.n, l + 1, upper)?,
            Family::new(self.n, l, lower)?,
        )
    }

    /// Header line `n=<n> l=<l>` followed by one set per line as ascending
    /// space-separated integers, lower level first.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} l={}\n", self.n, self.levels[0]);
        for set in &self.sets {
            let words: Vec<String> = set.iter().map(|e| e.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|s| !s.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::VerificationFailed("empty document".into()))?;
        let parse = |part: &str, key: &str| -> Result<u32> {
            part.strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::VerificationFailed(format!("bad header field {part:?}")))
        };
        let mut fields = header.split_whitespace();
        let n = parse(
            fields.next().ok_or_else(|| Error::VerificationFailed("bad header".into()))?,
            "n=",
        )?;
        let l = parse(
            fields.next().ok_or_else(|| Error::VerificationFailed("bad header".into()))?,
            "l=",
        )?;
        let mut sets = Vec::new();
        for line in lines {
            let set: std::result::Result<Vec<u32>, _> =
                line.split_whitespace().map(str::parse).collect();
            sets.push(set.map_err(|_| {
                Error::VerificationFailed(format!("unparsable set line {line:?}"))
            })?);
        }
        Ok(AntichainDocument {
            n,
            levels: [l, l + 1],
            size: sets.len() as u64,
            sets,
            trace: None,
        })
    }
}
