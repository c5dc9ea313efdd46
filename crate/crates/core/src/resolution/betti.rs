use std::fmt;

use serde::{Deserialize, Serialize};

/// Generator degrees of the steps of a minimal resolution of `D_0(f)`:
/// `d` for `D_0(f)` itself, `c` and `b` for the next two syzygy modules.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiData {
    pub d: Vec<u32>,
    pub c: Vec<u32>,
    pub b: Vec<u32>,
    /// Further steps, only possible with five or more variables.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub further: Vec<Vec<u32>>,
    pub num_vars: usize,
}

impl BettiData {
    pub fn new(num_vars: usize, d: Vec<u32>, c: Vec<u32>, b: Vec<u32>) -> Self {
        Self::from_steps(num_vars, vec![d, c, b])
    }

    pub fn from_steps(num_vars: usize, steps: Vec<Vec<u32>>) -> Self {
        let mut it = steps.into_iter().map(|mut s| {
            s.sort_unstable();
            s
        });
        let d = it.next().unwrap_or_default();
        let c = it.next().unwrap_or_default();
        let b = it.next().unwrap_or_default();
        let further = it.filter(|s| !s.is_empty()).collect();
        BettiData {
            d,
            c,
            b,
            further,
            num_vars,
        }
    }

    /// Parses the exponent notation, e.g. `d=(5,6_3), c=(7,8)`.
    pub fn parse(num_vars: usize, text: &str) -> Option<Self> {
        let mut steps: Vec<Vec<u32>> = vec![Vec::new(); 3];
        for part in text.split(')') {
            let part = part.trim().trim_start_matches(',').trim();
            if part.is_empty() {
                continue;
            }
            let (name, body) = part.split_once("=(")?;
            let slot = match name.trim() {
                "d" => 0,
                "c" => 1,
                "b" => 2,
                _ => return None,
            };
            for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (v, k): (u32, usize) = match item.split_once('_') {
                    Some((v, k)) => (v.parse().ok()?, k.parse().ok()?),
                    None => (item.parse().ok()?, 1usize),
                };
                steps[slot].extend(std::iter::repeat_n(v, k));
            }
        }
        Some(Self::from_steps(num_vars, steps))
    }

    pub fn steps(&self) -> Vec<&[u32]> {
        let mut v: Vec<&[u32]> = vec![&self.d, &self.c, &self.b];
        v.extend(self.further.iter().map(|s| s.as_slice()));
        v
    }

    /// `p - q + r - ...`, the rank of `D_0(f)`.
    pub fn alternating_rank(&self) -> i64 {
        self.steps()
            .iter()
            .enumerate()
            .map(|(i, s)| if i % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    pub fn mdr(&self) -> Option<u32> {
        self.d.first().copied()
    }
}

/// `5,6_3` style rendering of a sorted degree list.
pub fn exponent_notation(degs: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < degs.len() {
        let j = degs[i..].iter().take_while(|&&x| x == degs[i]).count();
        if j == 1 {
            parts.push(degs[i].to_string());
        } else {
            parts.push(format!("{}_{}", degs[i], j));
        }
        i += j;
    }
    parts.join(",")
}

impl fmt::Display for BettiData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d=({})", exponent_notation(&self.d))?;
        let names = ["c", "b"];
        for (name, s) in names.iter().zip([&self.c, &self.b]) {
            if !s.is_empty() {
                write!(f, ", {name}=({})", exponent_notation(s))?;
            }
        }
        for (i, s) in self.further.iter().enumerate() {
            write!(f, ", step{}=({})", i + 4, exponent_notation(s))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_notation_round_trip() {
        let b = BettiData::new(3, vec![6, 5, 6, 6], vec![8, 7], vec![]);
        assert_eq!(b.to_string(), "d=(5,6_3), c=(7,8)");
        assert_eq!(BettiData::parse(3, "d=(5,6_3), c=(7,8)"), Some(b.clone()));
        assert_eq!(b.alternating_rank(), 2);
        let e = BettiData::parse(4, "d=(2,6_2,7_7), c=(7,8_7,9_2), b=(9_2,10)").unwrap();
        assert_eq!(e.d.len(), 10);
        assert_eq!(e.alternating_rank(), 3);
        assert_eq!(e.to_string(), "d=(2,6_2,7_7), c=(7,8_7,9_2), b=(9_2,10)");
    }
}
