use serde::{Deserialize, Serialize};

use crate::resolution::BettiData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessClass {
    Free,
    NearlyFree,
    PlusOneGenerated,
    StrictlyPlusOneGenerated,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Freeness {
    pub class: FreenessClass,
    pub witness: BettiData,
    /// Type label attached from a table of known resolution shapes.
    pub label: Option<String>,
}

/// Known curve resolution shapes with their type labels.
const SHAPES: &[(&[u32], &[u32], &str)] = &[(&[5, 6, 6], &[8], "2A"), (&[5, 6, 6, 7], &[7, 8], "2B")];

/// Classifies from the shape of the resolution of `D_0(f)`, `deg = deg f`.
///
/// Free: a single step of `n - 1` generators. For curves, nearly free means
/// `d = (d1, d2, d2)`, `d1 + d2 = deg`, `c = (d2 + 1)`; plus-one generated
/// means three generators with `d1 + d2 = deg` and one relation, and
/// coincides with strictly plus-one generated. Surfaces get no pattern
/// beyond freeness.
pub fn classify_freeness(betti: &BettiData, deg: u32) -> Freeness {
    let d = &betti.d;
    let c = &betti.c;
    let class = if c.is_empty() && betti.b.is_empty() && d.len() == betti.num_vars - 1 {
        FreenessClass::Free
    } else if betti.num_vars == 3 && d.len() == 3 && c.len() == 1 && d[0] + d[1] == deg {
        if d[1] == d[2] && c[0] == d[1] + 1 {
            FreenessClass::NearlyFree
        } else {
            FreenessClass::PlusOneGenerated
        }
    } else {
        FreenessClass::Other
    };
    let label = if betti.num_vars == 3 && betti.b.is_empty() {
        SHAPES
            .iter()
            .find(|(sd, sc, _)| d.as_slice() == *sd && c.as_slice() == *sc)
            .map(|(_, _, l)| l.to_string())
    } else {
        None
    };
    Freeness {
        class,
        witness: betti.clone(),
        label,
    }
}
