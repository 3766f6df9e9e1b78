//! Planar embeddings of diagrams, found by brute force over the two cyclic
//! port orders each crossing can have.
//!
//! A crossing drawn in the plane sees its ports counter-clockwise either as
//! `s1_in, s2_in, s1_out, s2_out` or as `s1_in, s2_out, s1_out, s2_in`. A
//! choice for every crossing gives a surface; it is a sphere exactly when
//! `V - E + F = 2` on every connected piece.

use std::collections::BTreeSet;

use crate::diagram::{ArcId, Diagram, Port};
use crate::moves::R2Variant;

/// Largest connected piece (in crossings) the search will try.
pub const MAX_SEARCH_CROSSINGS: usize = 20;

const ROTATIONS: [[Port; 4]; 2] = [
    [Port::S1In, Port::S2In, Port::S1Out, Port::S2Out],
    [Port::S1In, Port::S2Out, Port::S1Out, Port::S2In],
];

fn next_ccw(flip: bool, port: Port) -> Port {
    let rotation = &ROTATIONS[flip as usize];
    let i = rotation.iter().position(|&p| p == port).expect("port in rotation");
    rotation[(i + 1) % 4]
}

/// One arc on a face boundary. `along` is true when the boundary walk
/// follows the arc's orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceSide {
    pub arc: ArcId,
    pub along: bool,
}

#[derive(Clone, Debug)]
pub struct Embedding {
    /// Rotation choice per crossing position.
    pub flips: Vec<bool>,
    /// Faces of each connected piece, listed piece by piece.
    pub faces: Vec<Vec<FaceSide>>,
    /// Connected piece of each crossing position.
    pub piece: Vec<usize>,
}

impl Embedding {
    pub fn piece_of_arc(&self, d: &Diagram, arc: ArcId) -> usize {
        self.piece[d.head(arc).crossing]
    }
}

/// Connected pieces of the crossing graph, as sorted crossing positions.
pub fn pieces(d: &Diagram) -> Vec<Vec<usize>> {
    let n = d.crossings().len();
    let mut piece = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if piece[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        piece[start] = id;
        let mut i = 0;
        while i < members.len() {
            let c = &d.crossings()[members[i]];
            for port in Port::ALL {
                let arc = c.arc(port);
                let other = if port.is_in() { d.tail(arc) } else { d.head(arc) };
                if piece[other.crossing] == usize::MAX {
                    piece[other.crossing] = id;
                    members.push(other.crossing);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn trace_faces(d: &Diagram, flips: &[bool], members: &[usize]) -> Vec<Vec<FaceSide>> {
    let mut visited = vec![false; 4 * d.crossings().len()];
    let mut faces = Vec::new();
    for &c in members {
        for port in Port::ALL {
            if visited[4 * c + port as usize] {
                continue;
            }
            let mut face = Vec::new();
            let (mut ci, mut p) = (c, port);
            while !visited[4 * ci + p as usize] {
                visited[4 * ci + p as usize] = true;
                let arc = d.crossings()[ci].arc(p);
                face.push(FaceSide { arc, along: !p.is_in() });
                let end = if p.is_in() { d.tail(arc) } else { d.head(arc) };
                ci = end.crossing;
                p = next_ccw(flips[ci], end.port);
            }
            faces.push(face);
        }
    }
    faces
}

fn count_faces(d: &Diagram, flips: &[bool], members: &[usize]) -> usize {
    trace_faces(d, flips, members).len()
}

/// A planar embedding, or `None` if there is none or some connected piece
/// exceeds [`MAX_SEARCH_CROSSINGS`].
pub fn find_embedding(d: &Diagram) -> Option<Embedding> {
    let n = d.crossings().len();
    let mut flips = vec![false; n];
    let mut piece = vec![0; n];
    let mut faces = Vec::new();
    for (id, members) in pieces(d).iter().enumerate() {
        if members.len() > MAX_SEARCH_CROSSINGS {
            return None;
        }
        // mirror images are equivalent, so the first crossing stays unflipped
        let free = members.len() - 1;
        let found = (0u64..1 << free).find(|mask| {
            for (k, &c) in members.iter().enumerate().skip(1) {
                flips[c] = mask >> (k - 1) & 1 == 1;
            }
            count_faces(d, &flips, members) == members.len() + 2
        });
        found?;
        for &c in members {
            piece[c] = id;
        }
        faces.extend(trace_faces(d, &flips, members));
    }
    Some(Embedding { flips, faces, piece })
}

pub fn is_planar(d: &Diagram) -> bool {
    find_embedding(d).is_some()
}

/// Two distinct arcs that can be joined by a Reidemeister II clasp without
/// leaving the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct R2Site {
    pub arc1: ArcId,
    pub arc2: ArcId,
    pub variant: R2Variant,
}

/// Arcs sharing a face of the embedding give the variant fixed by their
/// directions around that face. Arcs in different pieces can meet in either
/// variant, since one piece may be mirrored.
pub fn r2_sites(d: &Diagram, e: &Embedding) -> Vec<R2Site> {
    let mut sites = BTreeSet::new();
    let mut push = |a: ArcId, b: ArcId, variant| {
        if a != b {
            let (arc1, arc2) = if a < b { (a, b) } else { (b, a) };
            sites.insert(R2Site { arc1, arc2, variant });
        }
    };
    for face in &e.faces {
        for (i, x) in face.iter().enumerate() {
            for y in &face[i + 1..] {
                let variant = if x.along == y.along {
                    R2Variant::Antiparallel
                } else {
                    R2Variant::Parallel
                };
                push(x.arc, y.arc, variant);
            }
        }
    }
    let arcs: Vec<ArcId> = d.arcs().collect();
    for (i, &a) in arcs.iter().enumerate() {
        for &b in &arcs[i + 1..] {
            if e.piece_of_arc(d, a) != e.piece_of_arc(d, b) {
                push(a, b, R2Variant::Parallel);
                push(a, b, R2Variant::Antiparallel);
            }
        }
    }
    sites.into_iter().collect()
}
