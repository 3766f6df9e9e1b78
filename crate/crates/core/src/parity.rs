//! Weight maps on magnetic-graph edges and the parity of a state.
//!
//! A weight map assigns ±1 to every edge so that the two edges meeting at a
//! bivalent vertex differ. The parity of a virtual crossing is the product
//! of the weights of its two edges; the parity of a state is the product
//! over all virtual crossings. For graphs coming from planar diagrams this
//! does not depend on the weight map chosen.

use std::fmt;
use std::ops::Mul;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::states::MagneticGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn from_sign(sign: i8) -> Self {
        if sign < 0 {
            Parity::Minus
        } else {
            Parity::Plus
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    /// `(1 - i) / 2`: the power of `h` a state carries.
    pub fn h_exponent(self) -> u32 {
        match self {
            Parity::Plus => 0,
            Parity::Minus => 1,
        }
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_sign(self.sign() * rhs.sign())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.sign())
    }
}

/// Edge weights, indexed by edge id of the graph they were built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    pub weights: Vec<i8>,
}

impl WeightMap {
    pub fn weight(&self, edge: usize) -> i8 {
        self.weights[edge]
    }

    /// Every edge is weighted ±1 and neighbours along a component differ.
    pub fn is_valid_for(&self, g: &MagneticGraph) -> bool {
        if self.weights.len() != g.edges.len() || self.weights.iter().any(|w| w.abs() != 1) {
            return false;
        }
        g.components.iter().all(|c| {
            let n = c.edges.len();
            n == 1 || (0..n).all(|i| self.weights[c.edges[i]] != self.weights[c.edges[(i + 1) % n]])
        })
    }
}

/// Per component, the edge holding the smallest arc index gets +1 and the
/// weights alternate from there. Free loops get +1.
pub fn canonical_weight_map(g: &MagneticGraph) -> WeightMap {
    let mut weights = vec![1i8; g.edges.len()];
    for c in &g.components {
        let base = c
            .edges
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| g.edges[e].arcs.iter().min().map(|m| (*m, i)))
            .min()
            .map_or(0, |(_, i)| i);
        for (i, &e) in c.edges.iter().enumerate() {
            let distance = (i + c.edges.len() - base) % c.edges.len();
            weights[e] = if distance % 2 == 0 { 1 } else { -1 };
        }
    }
    WeightMap { weights }
}

/// The canonical map with each component's weights negated on a seeded coin.
pub fn random_weight_map(g: &MagneticGraph, seed: u64) -> WeightMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut map = canonical_weight_map(g);
    for c in &g.components {
        if rng.random_bool(0.5) {
            for &e in &c.edges {
                map.weights[e] = -map.weights[e];
            }
        }
    }
    map
}

pub fn parity(g: &MagneticGraph, w: &WeightMap) -> Parity {
    let sign = g
        .virtual_incidences
        .iter()
        .fold(1i8, |acc, inc| acc * w.weight(inc.edges.0) * w.weight(inc.edges.1));
    Parity::from_sign(sign)
}

/// Parity under the canonical weight map.
pub fn state_parity(g: &MagneticGraph) -> Parity {
    parity(g, &canonical_weight_map(g))
}
