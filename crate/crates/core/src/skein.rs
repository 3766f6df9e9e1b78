//! Skein-recursive evaluation of `⟨D⟩`, kept apart from the state sum so
//! the two can check each other.
//!
//! One unresolved crossing is expanded per step:
//!
//! | crossing  | oriented         | disoriented      |
//! |-----------|------------------|------------------|
//! | positive  | `-A^-2`          | `-A^-4`          |
//! | negative  | `-A^2`           | `-A^4`           |
//! | singular  | `-A^2 - A^-2`    | `-A^4 - A^-4`    |
//!
//! A fully resolved graph evaluates to `(-A^2-A^-2)^(#components)`: adjacent
//! source/sink pairs cancel and every closed curve, with or without virtual
//! self-crossings, is worth one loop factor.

use crate::diagram::{CrossingKind, Diagram, Port};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy)]
enum Local {
    Through,
    Oriented,
    Disoriented,
}

struct Skein<'a> {
    d: &'a Diagram,
    locals: Vec<Local>,
}

fn port_index(crossing: usize, port: Port) -> usize {
    4 * crossing + port as usize
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

impl Skein<'_> {
    fn count_loops(&self) -> usize {
        let n = 4 * self.d.crossings().len();
        let mut parent: Vec<usize> = (0..n).collect();
        for arc in self.d.arcs() {
            let h = self.d.head(arc);
            let t = self.d.tail(arc);
            union(
                &mut parent,
                port_index(h.crossing, h.port),
                port_index(t.crossing, t.port),
            );
        }
        for (ci, local) in self.locals.iter().enumerate() {
            let pairs = match local {
                Local::Through => [(Port::S1In, Port::S1Out), (Port::S2In, Port::S2Out)],
                Local::Oriented => [(Port::S1In, Port::S2Out), (Port::S2In, Port::S1Out)],
                Local::Disoriented => [(Port::S1In, Port::S2In), (Port::S1Out, Port::S2Out)],
            };
            for (a, b) in pairs {
                union(&mut parent, port_index(ci, a), port_index(ci, b));
            }
        }
        let roots = (0..n).filter(|&x| find(&mut parent, x) == x).count();
        roots + self.d.free_loops()
    }

    fn expand(&mut self, from: usize) -> LaurentPoly {
        let next = (from..self.d.crossings().len()).find(|&i| self.d.crossings()[i].kind != CrossingKind::Virtual);
        let Some(ci) = next else {
            let circle = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
            return circle.pow(self.count_loops() as u32);
        };
        let (oriented, disoriented) = match self.d.crossings()[ci].kind {
            CrossingKind::Positive => (LaurentPoly::monomial(-2, -1), LaurentPoly::monomial(-4, -1)),
            CrossingKind::Negative => (LaurentPoly::monomial(2, -1), LaurentPoly::monomial(4, -1)),
            CrossingKind::Singular => (
                LaurentPoly::from_terms([(2, -1), (-2, -1)]),
                LaurentPoly::from_terms([(4, -1), (-4, -1)]),
            ),
            CrossingKind::Virtual => unreachable!(),
        };
        self.locals[ci] = Local::Oriented;
        let left = &oriented * &self.expand(ci + 1);
        self.locals[ci] = Local::Disoriented;
        let right = &disoriented * &self.expand(ci + 1);
        self.locals[ci] = Local::Through;
        left + right
    }
}

/// `⟨D⟩` by recursive skein expansion. Exponential in `c + s`.
pub fn bracket_skein(d: &Diagram) -> LaurentPoly {
    let mut skein = Skein {
        d,
        locals: vec![Local::Through; d.crossings().len()],
    };
    skein.expand(0)
}
