//! Local moves: insertions that grow a diagram by a kink or a clasp, and
//! before/after pairs for the moves that rearrange crossings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{ArcId, CrossingKind, Diagram, RawCrossing, RawDiagram};
use crate::fixtures::{self, braid};
use crate::planar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveName {
    R1,
    R2,
    R3,
    RS1,
    RS2,
    V1,
    V2,
    V3v,
    V3c,
    V3s,
}

impl MoveName {
    pub const ALL: [MoveName; 10] = [
        MoveName::R1,
        MoveName::R2,
        MoveName::R3,
        MoveName::RS1,
        MoveName::RS2,
        MoveName::V1,
        MoveName::V2,
        MoveName::V3v,
        MoveName::V3c,
        MoveName::V3s,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MoveName::R1 => "R1",
            MoveName::R2 => "R2",
            MoveName::R3 => "R3",
            MoveName::RS1 => "RS1",
            MoveName::RS2 => "RS2",
            MoveName::V1 => "V1",
            MoveName::V2 => "V2",
            MoveName::V3v => "V3v",
            MoveName::V3c => "V3c",
            MoveName::V3s => "V3s",
        }
    }
}

impl fmt::Display for MoveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MoveName {
    type Err = MoveError;

    /// Case-insensitive. `V3r` is accepted as `V3c`.
    fn from_str(s: &str) -> Result<Self, MoveError> {
        if s.eq_ignore_ascii_case("v3r") {
            return Ok(MoveName::V3c);
        }
        MoveName::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| MoveError::UnknownMove(s.to_owned()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum R2Variant {
    /// Both strands pass the two new crossings in the same order.
    Parallel,
    /// The strands pass the two new crossings in opposite orders.
    Antiparallel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KinkSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("no arc named {0:?}")]
    UnknownArc(String),
    #[error("a clasp needs two different arcs, got {0:?} twice")]
    SameArc(String),
    #[error("unknown move {0:?}")]
    UnknownMove(String),
}

#[derive(Clone, Debug)]
pub struct MovePair {
    pub name: MoveName,
    pub label: String,
    pub before: Diagram,
    pub after: Diagram,
}

struct Surgery {
    raw: RawDiagram,
    taken: BTreeSet<String>,
    next_id: u32,
}

impl Surgery {
    fn new(d: &Diagram) -> Self {
        Self {
            raw: d.to_raw(),
            taken: d.arcs().map(|a| d.arc_name(a).to_owned()).collect(),
            next_id: d.max_crossing_id().unwrap_or(0) + 1,
        }
    }

    fn fresh(&mut self, base: &str) -> String {
        let name = (1..)
            .map(|k| format!("{base}.{k}"))
            .find(|n| !self.taken.contains(n))
            .expect("unbounded");
        self.taken.insert(name.clone());
        name
    }

    /// Splits `arc` into `pieces` consecutive arcs. The first keeps the old
    /// name and still leaves the old tail; the last enters the old head.
    /// A free loop becomes a cycle whose last piece is its first.
    fn split(&mut self, arc: &str, pieces: usize) -> Vec<String> {
        if !self.taken.contains(arc) {
            self.raw.free_loops -= 1;
            let mut names: Vec<String> = (1..pieces).map(|_| self.fresh("loop")).collect();
            names.push(names[0].clone());
            return names;
        }
        let mut names = vec![arc.to_owned()];
        for _ in 1..pieces {
            names.push(self.fresh(arc));
        }
        let last = names.last().expect("at least one piece").clone();
        for c in &mut self.raw.crossings {
            for slot in [0, 2] {
                if c.arcs[slot] == arc {
                    c.arcs[slot] = last.clone();
                    return names;
                }
            }
        }
        unreachable!("valid diagrams give every arc a head")
    }

    fn push(&mut self, kind: CrossingKind, arcs: [&str; 4]) {
        self.raw.crossings.push(RawCrossing::new(self.next_id, kind, arcs));
        self.next_id += 1;
    }

    fn finish(self) -> Diagram {
        Diagram::from_raw(&self.raw).expect("local insertions keep diagrams valid")
    }
}

/// Prefix naming a free loop: `~1` is the first, `~2` the second.
pub const FREE_LOOP_PREFIX: char = '~';

fn is_free_loop_ref(d: &Diagram, name: &str) -> bool {
    name.strip_prefix(FREE_LOOP_PREFIX)
        .and_then(|k| k.parse::<usize>().ok())
        .is_some_and(|k| (1..=d.free_loops()).contains(&k))
}

/// Arc names and free-loop references (`~k`) are both accepted; a real arc
/// name wins over a reference.
fn check_arc(d: &Diagram, arc: &str) -> Result<(), MoveError> {
    if d.arc_by_name(arc).is_some() || is_free_loop_ref(d, arc) {
        Ok(())
    } else {
        Err(MoveError::UnknownArc(arc.to_owned()))
    }
}

fn kink(d: &Diagram, arc: &str, kind: CrossingKind) -> Result<Diagram, MoveError> {
    check_arc(d, arc)?;
    let mut s = Surgery::new(d);
    let names = s.split(arc, 3);
    s.push(kind, [&names[0], &names[1], &names[1], &names[2]]);
    Ok(s.finish())
}

/// Adds a classical kink on `arc`.
pub fn insert_r1(d: &Diagram, arc: &str, sign: KinkSign) -> Result<Diagram, MoveError> {
    let kind = match sign {
        KinkSign::Positive => CrossingKind::Positive,
        KinkSign::Negative => CrossingKind::Negative,
    };
    kink(d, arc, kind)
}

/// Adds a virtual kink on `arc`.
pub fn insert_v1(d: &Diagram, arc: &str) -> Result<Diagram, MoveError> {
    kink(d, arc, CrossingKind::Virtual)
}

fn clasp(
    d: &Diagram,
    arc1: &str,
    arc2: &str,
    kinds: [CrossingKind; 2],
    variant: R2Variant,
) -> Result<Diagram, MoveError> {
    check_arc(d, arc1)?;
    check_arc(d, arc2)?;
    if arc1 == arc2 {
        return Err(MoveError::SameArc(arc1.to_owned()));
    }
    let mut s = Surgery::new(d);
    let a = s.split(arc1, 3);
    let b = s.split(arc2, 3);
    match variant {
        R2Variant::Parallel => {
            s.push(kinds[0], [&a[0], &a[1], &b[0], &b[1]]);
            s.push(kinds[1], [&a[1], &a[2], &b[1], &b[2]]);
        }
        R2Variant::Antiparallel => {
            s.push(kinds[0], [&a[0], &a[1], &b[1], &b[2]]);
            s.push(kinds[1], [&a[1], &a[2], &b[0], &b[1]]);
        }
    }
    Ok(s.finish())
}

/// Pushes `arc1` across `arc2`, making a positive then a negative crossing
/// along `arc1`. Only sites from [`planar::r2_sites`] keep a planar diagram
/// planar.
pub fn insert_r2(d: &Diagram, arc1: &str, arc2: &str, variant: R2Variant) -> Result<Diagram, MoveError> {
    clasp(d, arc1, arc2, [CrossingKind::Positive, CrossingKind::Negative], variant)
}

/// Two virtual crossings between `arc1` and `arc2`.
pub fn insert_v2(d: &Diagram, arc1: &str, arc2: &str) -> Result<Diagram, MoveError> {
    clasp(d, arc1, arc2, [CrossingKind::Virtual; 2], R2Variant::Parallel)
}

/// One inserted move, with the site it was applied at.
#[derive(Clone, Debug)]
pub struct Insertion {
    pub name: MoveName,
    pub site: String,
    pub after: Diagram,
}

/// Every kink on every arc, and every clasp at every planar R2 site and
/// every pair of arcs for V2. Free loops are interchangeable, so at most
/// two of them are used. Diagrams without a planar embedding get no R2
/// insertions between arcs.
pub fn all_insertions(d: &Diagram) -> Vec<Insertion> {
    let mut out = Vec::new();
    let loops: Vec<String> = (1..=d.free_loops().min(2))
        .map(|k| format!("{FREE_LOOP_PREFIX}{k}"))
        .collect();
    let mut names: Vec<&str> = d.arcs().map(|a| d.arc_name(a)).collect();
    let arc_count = names.len();
    names.extend(loops.iter().map(String::as_str).take(1));
    for &arc in &names {
        for (sign, tag) in [(KinkSign::Positive, "+"), (KinkSign::Negative, "-")] {
            out.push(Insertion {
                name: MoveName::R1,
                site: format!("{arc}{tag}"),
                after: insert_r1(d, arc, sign).expect("arc exists"),
            });
        }
        out.push(Insertion {
            name: MoveName::V1,
            site: arc.to_owned(),
            after: insert_v1(d, arc).expect("arc exists"),
        });
    }
    if let Some(e) = planar::find_embedding(d) {
        for site in planar::r2_sites(d, &e) {
            let (a, b) = (d.arc_name(site.arc1), d.arc_name(site.arc2));
            out.push(Insertion {
                name: MoveName::R2,
                site: format!("{a}/{b} {:?}", site.variant),
                after: insert_r2(d, a, b, site.variant).expect("distinct arcs"),
            });
        }
    }
    // a free loop fits in any face, either way round
    let mut loop_pairs: Vec<(&str, &str)> = Vec::new();
    if let Some(first) = loops.first() {
        loop_pairs.extend(names[..arc_count].iter().map(|&a| (a, first.as_str())));
    }
    if loops.len() == 2 {
        loop_pairs.push((&loops[0], &loops[1]));
    }
    for &(a, b) in &loop_pairs {
        for variant in [R2Variant::Parallel, R2Variant::Antiparallel] {
            out.push(Insertion {
                name: MoveName::R2,
                site: format!("{a}/{b} {variant:?}"),
                after: insert_r2(d, a, b, variant).expect("distinct strands"),
            });
        }
    }
    if loops.len() == 2 {
        names.push(&loops[1]);
    }
    for (i, &a) in names.iter().enumerate() {
        for &b in &names[i + 1..] {
            out.push(Insertion {
                name: MoveName::V2,
                site: format!("{a}/{b}"),
                after: insert_v2(d, a, b).expect("distinct arcs"),
            });
        }
    }
    out
}

fn braid_pair(name: MoveName, strands: usize, before: &str, after: &str) -> MovePair {
    MovePair {
        name,
        label: format!("{before} <-> {after}"),
        before: braid(strands, before),
        after: braid(strands, after),
    }
}

fn insertion_pair(name: MoveName, label: &str, before: Diagram, after: Result<Diagram, MoveError>) -> MovePair {
    MovePair {
        name,
        label: label.to_owned(),
        before,
        after: after.expect("built-in insertion site exists"),
    }
}

/// The antiparallel clasp between the first two arcs of different
/// direction on a common face.
fn antiparallel_pair(label: &str, d: Diagram) -> MovePair {
    let e = planar::find_embedding(&d).expect("fixture is planar");
    let site = planar::r2_sites(&d, &e)
        .into_iter()
        .find(|s| s.variant == R2Variant::Antiparallel)
        .expect("an antiparallel site exists");
    let after = insert_r2(&d, d.arc_name(site.arc1), d.arc_name(site.arc2), site.variant);
    insertion_pair(MoveName::R2, label, d, after)
}

fn virtual_clasp_pair(label: &str, d: Diagram) -> MovePair {
    let e = planar::find_embedding(&d).expect("fixture is planar");
    let site = planar::r2_sites(&d, &e)
        .into_iter()
        .find(|s| s.variant == R2Variant::Parallel)
        .expect("a parallel site exists");
    let after = insert_v2(&d, d.arc_name(site.arc1), d.arc_name(site.arc2));
    insertion_pair(MoveName::V2, label, d, after)
}

/// Before/after pairs covering all ten moves. Braid words use the
/// [`fixtures::parse_word`] syntax and are closed up.
pub fn builtin_fixture_pairs() -> Vec<MovePair> {
    use MoveName::*;
    let example = fixtures::example1();
    let trefoil = fixtures::trefoil();
    vec![
        insertion_pair(
            R1,
            "positive kink on trefoil",
            trefoil.clone(),
            insert_r1(&trefoil, "0", KinkSign::Positive),
        ),
        insertion_pair(
            R1,
            "negative kink on example1",
            example.clone(),
            insert_r1(&example, "3", KinkSign::Negative),
        ),
        braid_pair(R2, 2, "P1 S1", "P1 P1 N1 S1"),
        braid_pair(R2, 3, "S1 V2 P1", "S1 N2 V2 P2 P1"),
        antiparallel_pair("antiparallel clasp on singular hopf", fixtures::singular_hopf()),
        antiparallel_pair("antiparallel clasp on example1", example.clone()),
        braid_pair(R3, 3, "P1 P2 P1 S2", "P2 P1 P2 S2"),
        braid_pair(R3, 3, "P1 P2 N1 S2 V1", "N2 P1 P2 S2 V1"),
        braid_pair(R3, 3, "N1 N2 N1 V2 S1", "N2 N1 N2 V2 S1"),
        braid_pair(RS1, 3, "P1 P2 S1 V2", "S2 P1 P2 V2"),
        braid_pair(RS1, 3, "N1 N2 S1 P2", "S2 N1 N2 P2"),
        braid_pair(RS2, 2, "P1 S1 V1", "S1 P1 V1"),
        braid_pair(RS2, 3, "N1 S1 P2 S2", "S1 N1 P2 S2"),
        insertion_pair(V1, "virtual kink on trefoil", trefoil.clone(), insert_v1(&trefoil, "2")),
        insertion_pair(
            V1,
            "virtual kink on example1",
            example.clone(),
            insert_v1(&example, "5"),
        ),
        braid_pair(V2, 3, "P1 P2 N2", "P1 V2 V2 P2 N2"),
        virtual_clasp_pair("virtual clasp on example1", example.clone()),
        braid_pair(V3v, 3, "V1 V2 V1 P2 S1", "V2 V1 V2 P2 S1"),
        braid_pair(V3c, 3, "V1 P2 V1 S1 P2", "V2 P1 V2 S1 P2"),
        braid_pair(V3c, 3, "V1 N2 V1 P1 S2", "V2 N1 V2 P1 S2"),
        braid_pair(V3s, 3, "V1 S2 V1 P1 N2", "V2 S1 V2 P1 N2"),
        braid_pair(V3s, 3, "V1 S2 V1 S1 P2", "V2 S1 V2 S1 P2"),
    ]
}

/// Arc ids sorted by name, for stable iteration in reports.
pub fn arcs_by_name(d: &Diagram) -> Vec<ArcId> {
    let mut arcs: Vec<ArcId> = d.arcs().collect();
    arcs.sort_by(|a, b| d.arc_name(*a).cmp(d.arc_name(*b)));
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::is_planar;
    use crate::{bracket, r_poly, HLaurent, LaurentPoly};

    #[test]
    fn kink_adds_one_crossing_and_keeps_components() {
        let d = fixtures::trefoil();
        let k = insert_r1(&d, "0", KinkSign::Negative).unwrap();
        assert_eq!(k.crossings().len(), 4);
        assert_eq!(k.link_components(), 1);
        assert_eq!(k.counts().writhe, 2);
        assert!(is_planar(&k));
    }

    #[test]
    fn errors() {
        let d = fixtures::hopf();
        assert_eq!(insert_v1(&d, "zz").unwrap_err(), MoveError::UnknownArc("zz".into()));
        assert_eq!(insert_v2(&d, "0", "0").unwrap_err(), MoveError::SameArc("0".into()));
        assert!("R7".parse::<MoveName>().is_err());
        assert_eq!("v3r".parse::<MoveName>().unwrap(), MoveName::V3c);
    }

    #[test]
    fn moves_on_free_loops() {
        let circle = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        let unknot = Diagram::unlink(1);
        let k = insert_r1(&unknot, "~1", KinkSign::Positive).unwrap();
        assert_eq!((k.crossings().len(), k.free_loops(), k.link_components()), (1, 0, 1));
        assert_eq!(bracket(&k), circle);
        let v = insert_v1(&unknot, "~1").unwrap();
        assert_eq!(r_poly(&v), r_poly(&unknot));

        let two = Diagram::unlink(2);
        let square = &circle * &circle;
        for variant in [R2Variant::Parallel, R2Variant::Antiparallel] {
            let c = insert_r2(&two, "~1", "~2", variant).unwrap();
            assert_eq!((c.crossings().len(), c.free_loops(), c.link_components()), (2, 0, 2));
            assert_eq!(bracket(&c), square);
        }
        let w = insert_v2(&two, "~1", "~2").unwrap();
        assert_eq!(r_poly(&w), HLaurent::from(square));

        assert_eq!(
            insert_v1(&unknot, "~2").unwrap_err(),
            MoveError::UnknownArc("~2".into())
        );
        assert_eq!(
            insert_v2(&two, "~1", "~1").unwrap_err(),
            MoveError::SameArc("~1".into())
        );
    }

    #[test]
    fn clasps_add_two_crossings() {
        let d = fixtures::hopf();
        for variant in [R2Variant::Parallel, R2Variant::Antiparallel] {
            let c = insert_r2(&d, "0", "1", variant).unwrap();
            assert_eq!(c.crossings().len(), 4);
            assert_eq!(c.link_components(), 2);
            assert_eq!(c.counts().writhe, d.counts().writhe);
        }
    }

    #[test]
    fn planar_sites_stay_planar() {
        for (name, d) in fixtures::all() {
            for ins in all_insertions(&d) {
                if matches!(ins.name, MoveName::R1 | MoveName::R2) {
                    assert!(is_planar(&ins.after), "{name} {} {}", ins.name, ins.site);
                }
            }
        }
    }

    #[test]
    fn builtin_pairs_cover_every_move() {
        let pairs = builtin_fixture_pairs();
        for name in MoveName::ALL {
            assert!(pairs.iter().any(|p| p.name == name), "{name}");
        }
        for p in &pairs {
            assert!(is_planar(&p.before), "{}", p.label);
            assert!(is_planar(&p.after), "{}", p.label);
            assert_eq!(p.before.link_components(), p.after.link_components(), "{}", p.label);
        }
    }
}
