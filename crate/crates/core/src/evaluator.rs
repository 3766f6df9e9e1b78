//! The state sum for `⟨D⟩` and its parity-enhanced refinement `R(D)`.
//!
//! Each state contributes
//! `A^(2a+4b) (-A^2-A^-2)^(α+||S||) (-A^4-A^-4)^β h^((1-i)/2)`
//! and the total is multiplied by `(-1)^c` once. States are independent, so
//! the sum is a map-reduce: each worker tallies how many states share the
//! same exponent data, and the tallies are expanded into a polynomial at the
//! end.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Counts, CrossingKind, Diagram};
use crate::laurent::{HLaurent, LaurentPoly};
use crate::parity::state_parity;
use crate::states::{enumerate_states, resolve, stats, State, StateStats};

/// Value of a closed loop, `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Weight of a disoriented singular resolution, `-A^4 - A^-4`.
pub fn singular_disoriented_weight() -> LaurentPoly {
    LaurentPoly::from_terms([(4, -1), (-4, -1)])
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no crossing with id {0}")]
    UnknownCrossing(u32),
    #[error("crossing {0} is not singular")]
    NotSingular(u32),
}

/// Weighted contribution of one enhanced state, before the global sign.
pub fn state_contribution(s: &StateStats) -> HLaurent {
    let poly = loop_value().pow(s.alpha + s.n_components).shifted(2 * s.a + 4 * s.b);
    let poly = &poly * &singular_disoriented_weight().pow(s.beta);
    HLaurent::graded(poly, s.parity.h_exponent())
}

/// Highest power of `A` in the state contribution.
pub fn max_a(s: &StateStats) -> i64 {
    2 * s.a + 4 * s.b + 2 * (s.alpha + s.n_components) as i64 + 4 * s.beta as i64
}

/// Resolves `st` and measures it, using the canonical weight map for parity.
pub fn state_stats(d: &Diagram, st: &State) -> StateStats {
    let g = resolve(d, st);
    let parity = state_parity(&g);
    stats(d, st, &g, parity)
}

/// One row of the state table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateRow {
    pub state: State,
    pub stats: StateStats,
    pub contribution: HLaurent,
}

pub fn state_table(d: &Diagram) -> Vec<StateRow> {
    enumerate_states(d)
        .map(|state| {
            let stats = state_stats(d, &state);
            StateRow {
                state,
                stats,
                contribution: state_contribution(&stats),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct TallyKey {
    shift: i64,
    loops: u32,
    beta: u32,
    odd: bool,
}

impl From<&StateStats> for TallyKey {
    fn from(s: &StateStats) -> Self {
        TallyKey {
            shift: 2 * s.a + 4 * s.b,
            loops: s.alpha + s.n_components,
            beta: s.beta,
            odd: s.parity.h_exponent() == 1,
        }
    }
}

/// Multiset of state contributions, keyed by their exponent data.
#[derive(Clone, Debug, Default)]
struct Tally(HashMap<TallyKey, u64>);

impl Tally {
    fn record(mut self, d: &Diagram, mask: u64) -> Self {
        let st = State::new(mask, d.resolvable().len());
        *self.0.entry(TallyKey::from(&state_stats(d, &st))).or_default() += 1;
        self
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: Tally) -> Self {
        if self.0.len() < other.0.len() {
            return other.merge(self);
        }
        for (k, n) in other.0 {
            *self.0.entry(k).or_default() += n;
        }
        self
    }

    fn expand(self, negate: bool) -> HLaurent {
        let mut loop_powers: HashMap<u32, LaurentPoly> = HashMap::new();
        let mut singular_powers: HashMap<u32, LaurentPoly> = HashMap::new();
        let mut out = HLaurent::zero();
        let mut entries: Vec<_> = self.0.into_iter().collect();
        entries.sort_by_key(|(k, _)| (k.odd, k.shift, k.loops, k.beta));
        for (key, count) in entries {
            let lp = loop_powers
                .entry(key.loops)
                .or_insert_with(|| loop_value().pow(key.loops))
                .clone();
            let sp = singular_powers
                .entry(key.beta)
                .or_insert_with(|| singular_disoriented_weight().pow(key.beta));
            let mut coeff = BigInt::from(count);
            if negate {
                coeff = -coeff;
            }
            let term = (&lp * sp).shifted(key.shift).scaled(&coeff);
            if key.odd {
                out.odd += &term;
            } else {
                out.even += &term;
            }
        }
        out
    }
}

fn state_range(d: &Diagram) -> std::ops::Range<u64> {
    let len = d.resolvable().len();
    assert!(len <= State::MAX_RESOLVABLE, "too many resolvable crossings");
    0..1u64 << len
}

/// `R(D)` summed on the calling thread.
pub fn r_poly_sequential(d: &Diagram) -> HLaurent {
    state_range(d)
        .fold(Tally::default(), |t, mask| t.record(d, mask))
        .expand(d.counts().classical % 2 == 1)
}

/// `R(D)` with states fanned out over the rayon pool.
#[cfg(feature = "parallel")]
pub fn r_poly_parallel(d: &Diagram) -> HLaurent {
    use rayon::prelude::*;
    state_range(d)
        .into_par_iter()
        .fold(Tally::default, |t, mask| t.record(d, mask))
        .reduce(Tally::default, Tally::merge)
        .expand(d.counts().classical % 2 == 1)
}

/// `R(D) = (-1)^c Σ_S contribution(S)`.
pub fn r_poly(d: &Diagram) -> HLaurent {
    #[cfg(feature = "parallel")]
    {
        r_poly_parallel(d)
    }
    #[cfg(not(feature = "parallel"))]
    {
        r_poly_sequential(d)
    }
}

/// `⟨D⟩`, i.e. `R(D)` at `h = 1`.
pub fn bracket(d: &Diagram) -> LaurentPoly {
    r_poly(d).eval_h1()
}

/// `(φ, ψ)` with `R(D) = φ h + ψ`.
pub fn split(d: &Diagram) -> (LaurentPoly, LaurentPoly) {
    let r = r_poly(d);
    (r.odd, r.even)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub bracket: LaurentPoly,
    pub r_poly: HLaurent,
    pub phi: LaurentPoly,
    pub psi: LaurentPoly,
    pub k: usize,
    pub state_count: u64,
    pub counts: Counts,
}

/// The JSON result document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub k: usize,
    pub c: usize,
    pub s: usize,
    pub v: usize,
    pub writhe: i64,
    pub bracket: LaurentPoly,
    pub r: HLaurent,
    pub phi: LaurentPoly,
    pub psi: LaurentPoly,
}

impl InvariantResult {
    pub fn document(&self) -> ResultDocument {
        ResultDocument {
            k: self.k,
            c: self.counts.classical,
            s: self.counts.singular,
            v: self.counts.virtual_,
            writhe: self.counts.writhe,
            bracket: self.bracket.clone(),
            r: self.r_poly.clone(),
            phi: self.phi.clone(),
            psi: self.psi.clone(),
        }
    }
}

pub fn evaluate(d: &Diagram) -> InvariantResult {
    let r = r_poly(d);
    InvariantResult {
        bracket: r.eval_h1(),
        phi: r.odd.clone(),
        psi: r.even.clone(),
        r_poly: r,
        k: d.link_components(),
        state_count: 1u64 << d.resolvable().len(),
        counts: d.counts(),
    }
}

/// Checks `⟨singular⟩ = ⟨positive⟩ + ⟨negative⟩` at crossing `id`, for both
/// the bracket and `R`.
pub fn check_singular_identity(d: &Diagram, id: u32) -> Result<bool, EvalError> {
    let crossing = d.crossing_by_id(id).ok_or(EvalError::UnknownCrossing(id))?;
    if crossing.kind != CrossingKind::Singular {
        return Err(EvalError::NotSingular(id));
    }
    let positive = d.with_kind(id, CrossingKind::Positive).expect("crossing exists");
    let negative = d.with_kind(id, CrossingKind::Negative).expect("crossing exists");
    let r = r_poly(d);
    let r_sum = &r_poly(&positive) + &r_poly(&negative);
    let bracket_sum = &bracket(&positive) + &bracket(&negative);
    Ok(r == r_sum && r.eval_h1() == bracket_sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::disjoint_union;
    use crate::fixtures;
    use crate::parity::Parity;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn stats_of(a: i64, b: i64, alpha: u32, beta: u32, n: u32, parity: Parity) -> StateStats {
        StateStats {
            a,
            b,
            alpha,
            beta,
            n_components: n,
            parity,
        }
    }

    #[test]
    fn contributions_of_example_rows() {
        let s1 = stats_of(1, 0, 1, 0, 1, Parity::Plus);
        assert_eq!(
            state_contribution(&s1),
            HLaurent::from(&LaurentPoly::monomial(2, 1) * &loop_value().pow(2))
        );
        let s2 = stats_of(0, 1, 1, 0, 1, Parity::Minus);
        assert_eq!(
            state_contribution(&s2),
            HLaurent::with_h(&LaurentPoly::monomial(4, 1) * &loop_value().pow(2))
        );
        let unknot = stats_of(0, 0, 0, 0, 1, Parity::Plus);
        assert_eq!(state_contribution(&unknot), HLaurent::from(p("-A^2 - A^-2")));
    }

    #[test]
    fn max_a_values() {
        assert_eq!(max_a(&stats_of(1, 0, 1, 0, 1, Parity::Plus)), 6);
        assert_eq!(max_a(&stats_of(0, 0, 0, 0, 1, Parity::Plus)), 2);
    }

    #[test]
    fn unknot_values() {
        let d = fixtures::unknot();
        assert_eq!(r_poly(&d), HLaurent::from(p("-A^2 - A^-2")));
        assert_eq!(bracket(&d), p("-A^2 - A^-2"));
        let (phi, psi) = split(&d);
        assert!(phi.is_zero());
        assert_eq!(psi, p("-A^2 - A^-2"));
    }

    #[test]
    fn example_values() {
        let d = fixtures::example1();
        assert_eq!(bracket(&d), p("A^12 - A^6 - A^4 - 2 A^2 - A^-2"));
        assert_eq!(r_poly(&d), "A^12 h - A^4 h - A^6 - 2 A^2 - A^-2".parse().unwrap());
        let (phi, psi) = split(&d);
        assert_eq!(phi, p("A^12 - A^4"));
        assert_eq!(psi, p("-A^6 - 2 A^2 - A^-2"));
    }

    #[test]
    fn sequential_matches_default() {
        for (name, d) in fixtures::all() {
            assert_eq!(r_poly_sequential(&d), r_poly(&d), "{name}");
        }
    }

    #[test]
    fn adding_an_unknot_multiplies_by_loop_value() {
        let d = fixtures::example1();
        let u = disjoint_union(&d, &fixtures::unknot());
        assert_eq!(r_poly(&u), &r_poly(&d) * &loop_value());
    }

    #[test]
    fn empty_diagram_is_one() {
        assert_eq!(r_poly(&Diagram::empty()), HLaurent::one());
    }

    #[test]
    fn singular_identity_errors() {
        let d = fixtures::example1();
        assert_eq!(check_singular_identity(&d, 2), Ok(true));
        assert_eq!(check_singular_identity(&d, 3), Err(EvalError::NotSingular(3)));
        assert_eq!(check_singular_identity(&d, 99), Err(EvalError::UnknownCrossing(99)));
    }

    #[test]
    fn evaluate_fills_every_field() {
        let res = evaluate(&fixtures::example1());
        assert_eq!(res.k, 1);
        assert_eq!(res.state_count, 4);
        assert_eq!(res.r_poly.eval_h1(), res.bracket);
        assert_eq!(res.phi, res.r_poly.odd);
        assert_eq!(res.psi, res.r_poly.even);
        assert!(res.bracket.all_exponents_even());
    }
}
