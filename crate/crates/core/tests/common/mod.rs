//! Test-only oracles that share no code with the library.
#![allow(dead_code)]

/// `(a, b, alpha, beta, loops, parity)`
pub type Row = (i64, i64, i64, i64, i64, i64);

/// Expected rows for states in mask order, bit 0 being the negative
/// crossing (id 1) and bit 1 the singular one (id 2).
pub const TABLE1: [Row; 4] = [
    (1, 0, 1, 0, 1, 1),
    (0, 1, 1, 0, 1, -1),
    (1, 0, 0, 1, 1, -1),
    (0, 1, 0, 1, 2, -1),
];

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    N,
    S,
    V,
}

const KINDS: [Kind; 4] = [Kind::N, Kind::S, Kind::V, Kind::V];

// port slots: 4 * crossing + {0: s1_in, 1: s1_out, 2: s2_in, 3: s2_out}
const OUT_SLOTS: [usize; 8] = [1, 3, 5, 7, 9, 11, 13, 15];
const IN_SLOTS: [usize; 8] = [0, 2, 4, 6, 8, 10, 12, 14];

/// `perm[k]` is the in-port that out-port `k` feeds.
struct Wiring {
    partner: [usize; 16],
}

impl Wiring {
    fn new(perm: &[usize; 8]) -> Self {
        let mut partner = [0; 16];
        for (k, &target) in perm.iter().enumerate() {
            partner[OUT_SLOTS[k]] = IN_SLOTS[target];
            partner[IN_SLOTS[target]] = OUT_SLOTS[k];
        }
        Self { partner }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Local {
    Through,
    Oriented,
    Disoriented,
}

fn inside(slot: usize, local: Local) -> usize {
    let (c, p) = (slot / 4, slot % 4);
    let q = match local {
        Local::Through => [1, 0, 3, 2][p],
        Local::Oriented => [3, 2, 1, 0][p],
        Local::Disoriented => [2, 3, 0, 1][p],
    };
    4 * c + q
}

/// Cycles of the resolved graph: for each slot, (cycle id, edge index).
/// Edge indices step each time a disoriented crossing is crossed.
fn cycles(w: &Wiring, locals: &[Local; 4]) -> (usize, [(usize, usize); 16], Vec<usize>) {
    let mut label = [(usize::MAX, 0); 16];
    let mut vertex_counts = Vec::new();
    let mut count = 0;
    for start in 0..16 {
        if label[start].0 != usize::MAX {
            continue;
        }
        let mut edge = 0;
        let mut slot = start;
        loop {
            label[slot] = (count, edge);
            let across = w.partner[slot];
            label[across] = (count, edge);
            let local = locals[across / 4];
            if local == Local::Disoriented {
                edge += 1;
            }
            slot = inside(across, local);
            if slot == start {
                break;
            }
        }
        vertex_counts.push(edge);
        count += 1;
    }
    (count, label, vertex_counts)
}

fn is_planar(w: &Wiring) -> bool {
    let rotations = [[0, 2, 1, 3], [0, 3, 1, 2]];
    (0..16u32).any(|flips| {
        let mut seen = [false; 16];
        let mut faces = 0;
        for start in 0..16 {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut slot = start;
            while !seen[slot] {
                seen[slot] = true;
                let end = w.partner[slot];
                let (c, p) = (end / 4, end % 4);
                let rot = rotations[(flips >> c & 1) as usize];
                let i = rot.iter().position(|&x| x == p).unwrap();
                slot = 4 * c + rot[(i + 1) % 4];
            }
        }
        faces == 6
    })
}

/// `Some(rows)` when every weight map gives the same parity per state.
fn table(w: &Wiring) -> Option<Vec<Row>> {
    let mut rows = Vec::new();
    for mask in 0..4u32 {
        let neg = if mask & 1 == 1 {
            Local::Disoriented
        } else {
            Local::Oriented
        };
        let sing = if mask & 2 == 2 {
            Local::Disoriented
        } else {
            Local::Oriented
        };
        let locals = [neg, sing, Local::Through, Local::Through];
        let (n, label, vertices) = cycles(w, &locals);
        if vertices.iter().any(|v| v % 2 == 1) {
            return None;
        }
        let mut parities = (0..1u32 << n).map(|signs| {
            let weight = |slot: usize| {
                let (cycle, edge) = label[slot];
                let base = if signs >> cycle & 1 == 1 { -1 } else { 1 };
                if edge % 2 == 0 {
                    base
                } else {
                    -base
                }
            };
            (2..4).map(|c| weight(4 * c) * weight(4 * c + 2)).product::<i64>()
        });
        let first = parities.next().unwrap();
        if parities.any(|p| p != first) {
            return None;
        }
        let (a, b) = if mask & 1 == 1 { (0, 1) } else { (1, 0) };
        let (alpha, beta) = if mask & 2 == 2 { (0, 1) } else { (1, 0) };
        rows.push((a, b, alpha, beta, n as i64, first));
    }
    Some(rows)
}

fn one_component(w: &Wiring) -> bool {
    let (n, _, _) = cycles(w, &[Local::Through; 4]);
    n == 1
}

fn next_permutation(p: &mut [usize; 8]) -> bool {
    let Some(i) = (0..7).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..8).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// First wiring, in lexicographic order, of one negative, one singular and
/// two virtual crossings that is a planar one-component diagram whose
/// states reproduce [`TABLE1`].
pub fn example1_search() -> Option<[usize; 8]> {
    let mut perm = [0, 1, 2, 3, 4, 5, 6, 7];
    loop {
        let w = Wiring::new(&perm);
        if one_component(&w) && table(&w).is_some_and(|rows| rows == TABLE1) && is_planar(&w) {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

/// The diagram text of a wiring, arcs named by out-port index.
pub fn wiring_text(perm: &[usize; 8]) -> String {
    let mut arcs = [0usize; 16];
    for (k, &target) in perm.iter().enumerate() {
        arcs[OUT_SLOTS[k]] = k;
        arcs[IN_SLOTS[target]] = k;
    }
    let mut out = String::new();
    for (c, kind) in KINDS.iter().enumerate() {
        let code = match kind {
            Kind::N => "N",
            Kind::S => "S",
            Kind::V => "V",
        };
        out.push_str(&format!(
            "crossing {} {code} {} {} {} {}\n",
            c + 1,
            arcs[4 * c],
            arcs[4 * c + 1],
            arcs[4 * c + 2],
            arcs[4 * c + 3]
        ));
    }
    out
}

/// Dense coefficient vector of a Laurent polynomial in `A`, exponent
/// offset by `OFFSET`.
pub const OFFSET: i64 = 64;

pub fn dense_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    let mut out = vec![0; x.len() + y.len()];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            if a != 0 && b != 0 {
                out[i + j] += a * b;
            }
        }
    }
    out
}

/// `A^e` as a dense vector centred on [`OFFSET`].
pub fn dense_monomial(e: i64, c: i64) -> Vec<i64> {
    let mut v = vec![0; 2 * OFFSET as usize + 1];
    v[(e + OFFSET) as usize] = c;
    v
}

/// `(exponent, coefficient)` pairs of a dense product of `factors`
/// centred vectors, lowest exponent first.
pub fn dense_terms(v: &[i64], factors: usize) -> Vec<(i64, i64)> {
    let shift = OFFSET * factors as i64;
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i as i64 - shift, c))
        .collect()
}

/// Table contribution of a row, without the global sign, computed by
/// plain convolution. Returns (terms, carries h).
pub fn row_contribution(row: Row) -> (Vec<(i64, i64)>, bool) {
    let (a, b, alpha, beta, loops, parity) = row;
    let circle = {
        let mut v = dense_monomial(2, -1);
        v[(OFFSET - 2) as usize] = -1;
        v
    };
    let singular = {
        let mut v = dense_monomial(4, -1);
        v[(OFFSET - 4) as usize] = -1;
        v
    };
    let mut acc = dense_monomial(2 * a + 4 * b, 1);
    let mut factors = 1;
    for _ in 0..alpha + loops {
        acc = dense_mul(&acc, &circle);
        factors += 1;
    }
    for _ in 0..beta {
        acc = dense_mul(&acc, &singular);
        factors += 1;
    }
    (dense_terms(&acc, factors), parity == -1)
}
