//! Seeded random planar diagrams, built as closures of random virtual
//! singular braids with an occasional kink, clasp or free loop.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{CrossingKind, Diagram};
use crate::fixtures::{braid_closure, Letter};
use crate::moves::{insert_r1, insert_r2, KinkSign};
use crate::planar;

#[derive(Clone, Copy, Debug)]
pub struct RandomParams {
    /// Upper bound on classical plus singular crossings.
    pub max_resolvable: usize,
    pub max_virtual: usize,
    pub max_strands: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        Self {
            max_resolvable: 6,
            max_virtual: 4,
            max_strands: 4,
        }
    }
}

const RESOLVABLE: [CrossingKind; 3] = [CrossingKind::Positive, CrossingKind::Negative, CrossingKind::Singular];

pub fn random_diagram(seed: u64, params: RandomParams) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strands = rng.random_range(2..=params.max_strands.max(2));
    let mut budget = rng.random_range(0..=params.max_resolvable);
    let clasp = budget >= 2 && rng.random_bool(0.25);
    if clasp {
        budget -= 2;
    }
    let kink = budget >= 1 && rng.random_bool(0.2);
    if kink {
        budget -= 1;
    }
    let n_virtual = rng.random_range(0..=params.max_virtual);

    let mut word: Vec<Letter> = (0..budget)
        .map(|_| Letter {
            position: 0,
            kind: *RESOLVABLE.choose(&mut rng).expect("non-empty"),
        })
        .chain((0..n_virtual).map(|_| Letter {
            position: 0,
            kind: CrossingKind::Virtual,
        }))
        .collect();
    for i in (1..word.len()).rev() {
        let j = rng.random_range(0..=i);
        word.swap(i, j);
    }
    for letter in &mut word {
        letter.position = rng.random_range(0..strands - 1);
    }
    let mut d = braid_closure(strands, &word);

    if kink && d.arc_count() > 0 {
        let arc = d
            .arc_name(crate::diagram::ArcId(rng.random_range(0..d.arc_count())))
            .to_owned();
        let sign = if rng.random_bool(0.5) {
            KinkSign::Positive
        } else {
            KinkSign::Negative
        };
        d = insert_r1(&d, &arc, sign).expect("arc exists");
    }
    if clasp {
        if let Some(e) = planar::find_embedding(&d) {
            let sites = planar::r2_sites(&d, &e);
            if let Some(site) = sites.choose(&mut rng) {
                let (a, b) = (d.arc_name(site.arc1).to_owned(), d.arc_name(site.arc2).to_owned());
                d = insert_r2(&d, &a, &b, site.variant).expect("distinct arcs");
                let singular = rng.random_bool(0.3);
                if singular {
                    let id = d.max_crossing_id().expect("clasp added crossings");
                    d = d.with_kind(id, CrossingKind::Singular).expect("crossing exists");
                }
            }
        }
    }
    if rng.random_bool(0.15) {
        d = crate::diagram::disjoint_union(&d, &Diagram::unlink(1));
    }
    d
}

/// `count` diagrams from consecutive seeds starting at `seed`.
pub fn random_diagrams(seed: u64, count: usize, params: RandomParams) -> Vec<Diagram> {
    (0..count as u64)
        .map(|i| random_diagram(seed.wrapping_add(i), params))
        .collect()
}
