//! Resolution states and the purely virtual magnetic graphs they produce.

use serde::Serialize;

use crate::diagram::{ArcId, CrossingKind, Diagram, Port};
use crate::parity::Parity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Resolution {
    Oriented,
    Disoriented,
}

/// A resolution for every classical and singular crossing.
///
/// Bit `i` of the mask is set when the `i`-th resolvable crossing (in id
/// order) is resolved disoriented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct State {
    mask: u64,
    len: u32,
}

impl State {
    pub const MAX_RESOLVABLE: usize = 63;

    pub fn new(mask: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_RESOLVABLE, "too many resolvable crossings");
        assert!(len == 64 || mask >> len == 0, "mask wider than the state");
        Self { mask, len: len as u32 }
    }

    pub fn all_oriented(d: &Diagram) -> Self {
        Self::new(0, d.resolvable().len())
    }

    pub fn all_disoriented(d: &Diagram) -> Self {
        let len = d.resolvable().len();
        Self::new((1u64 << len) - 1, len)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, slot: usize) -> Resolution {
        if self.mask >> slot & 1 == 1 {
            Resolution::Disoriented
        } else {
            Resolution::Oriented
        }
    }

    pub fn flipped(&self, slot: usize) -> Self {
        assert!(slot < self.len());
        Self {
            mask: self.mask ^ (1 << slot),
            len: self.len,
        }
    }

    /// `(crossing id, resolution)` for every resolvable crossing of `d`.
    pub fn assignment(&self, d: &Diagram) -> Vec<(u32, Resolution)> {
        d.resolvable()
            .iter()
            .enumerate()
            .map(|(slot, &ci)| (d.crossings()[ci].id, self.get(slot)))
            .collect()
    }

    /// Resolution of the crossing with the given id, if it is resolvable.
    pub fn resolution_of(&self, d: &Diagram, id: u32) -> Option<Resolution> {
        d.resolvable()
            .iter()
            .position(|&ci| d.crossings()[ci].id == id)
            .map(|slot| self.get(slot))
    }
}

/// All `2^(c+s)` states in binary-counter order.
pub fn enumerate_states(d: &Diagram) -> impl DoubleEndedIterator<Item = State> + Clone {
    let len = d.resolvable().len();
    assert!(len <= State::MAX_RESOLVABLE, "too many resolvable crossings");
    (0..1u64 << len).map(move |mask| State::new(mask, len))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    Source,
    Sink,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    /// The disoriented crossing that produced this vertex.
    pub crossing: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    /// An arc of the diagram, traversed along (`forward`) or against its
    /// orientation.
    Arc {
        arc: ArcId,
        forward: bool,
    },
    Vertex(usize),
    /// Passage through a virtual crossing, by id.
    Virtual(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub component: usize,
    /// Arcs on this edge in traversal order; empty for a free loop.
    pub arcs: Vec<ArcId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Cyclic traversal, starting just after a vertex when there is one.
    pub events: Vec<Event>,
    /// Edge ids in traversal order.
    pub edges: Vec<usize>,
}

impl Component {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.events.iter().filter_map(|e| match e {
            Event::Vertex(v) => Some(*v),
            _ => None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VirtualIncidence {
    pub crossing: u32,
    /// Edges carrying strand 1 and strand 2; equal for a self-crossing.
    pub edges: (usize, usize),
}

/// A Kauffman-Jones state: closed curves with bivalent source/sink vertices
/// and the virtual crossings of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagneticGraph {
    pub components: Vec<Component>,
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
    pub virtual_incidences: Vec<VirtualIncidence>,
}

impl MagneticGraph {
    pub fn n_components(&self) -> usize {
        self.components.len()
    }
}

#[derive(Clone, Copy)]
enum Via {
    Straight,
    Vertex(usize),
    Virtual(u32),
}

#[derive(Clone, Copy)]
struct Link {
    other: usize,
    via: Via,
}

const fn head_end(arc: ArcId) -> usize {
    2 * arc.0
}

const fn tail_end(arc: ArcId) -> usize {
    2 * arc.0 + 1
}

/// Resolves every classical and singular crossing of `d` according to `st`.
///
/// Oriented: `s1_in` continues to `s2_out` and `s2_in` to `s1_out`.
/// Disoriented: a sink joins the two in-arcs, a source the two out-arcs.
/// Virtual crossings are passed straight through.
pub fn resolve(d: &Diagram, st: &State) -> MagneticGraph {
    assert_eq!(st.len(), d.resolvable().len(), "state does not match diagram");
    let n_ends = 2 * d.arc_count();
    let mut links: Vec<Option<Link>> = vec![None; n_ends];
    let mut vertices = Vec::new();
    let mut connect = |a: usize, b: usize, via: Via| {
        links[a] = Some(Link { other: b, via });
        links[b] = Some(Link { other: a, via });
    };

    let mut slot = 0;
    for c in d.crossings() {
        let i1 = c.arc(Port::S1In);
        let o1 = c.arc(Port::S1Out);
        let i2 = c.arc(Port::S2In);
        let o2 = c.arc(Port::S2Out);
        if c.kind == CrossingKind::Virtual {
            connect(head_end(i1), tail_end(o1), Via::Virtual(c.id));
            connect(head_end(i2), tail_end(o2), Via::Virtual(c.id));
            continue;
        }
        match st.get(slot) {
            Resolution::Oriented => {
                connect(head_end(i1), tail_end(o2), Via::Straight);
                connect(head_end(i2), tail_end(o1), Via::Straight);
            }
            Resolution::Disoriented => {
                vertices.push(Vertex {
                    kind: VertexKind::Sink,
                    crossing: c.id,
                });
                connect(head_end(i1), head_end(i2), Via::Vertex(vertices.len() - 1));
                vertices.push(Vertex {
                    kind: VertexKind::Source,
                    crossing: c.id,
                });
                connect(tail_end(o1), tail_end(o2), Via::Vertex(vertices.len() - 1));
            }
        }
        slot += 1;
    }

    let mut components = Vec::new();
    let mut edges = Vec::new();
    let mut arc_edge = vec![usize::MAX; d.arc_count()];
    let mut seen = vec![false; d.arc_count()];

    for start in d.arcs() {
        if seen[start.0] {
            continue;
        }
        let mut events = Vec::new();
        let mut arc = start;
        let mut forward = true;
        loop {
            seen[arc.0] = true;
            events.push(Event::Arc { arc, forward });
            let exit = if forward { head_end(arc) } else { tail_end(arc) };
            let link = links[exit].expect("every arc end is linked");
            match link.via {
                Via::Straight => {}
                Via::Vertex(v) => events.push(Event::Vertex(v)),
                Via::Virtual(id) => events.push(Event::Virtual(id)),
            }
            arc = ArcId(link.other / 2);
            // entering at a tail end means traversing the next arc forward
            forward = link.other % 2 == 1;
            if arc == start && forward {
                break;
            }
        }

        if let Some(first_vertex) = events.iter().position(|e| matches!(e, Event::Vertex(_))) {
            events.rotate_left(first_vertex + 1);
        }
        let component = components.len();
        let mut component_edges = vec![edges.len()];
        edges.push(Edge {
            component,
            arcs: Vec::new(),
        });
        let n_events = events.len();
        for (i, event) in events.iter().enumerate() {
            match event {
                Event::Arc { arc, .. } => {
                    let e = *component_edges.last().unwrap();
                    edges[e].arcs.push(*arc);
                    arc_edge[arc.0] = e;
                }
                Event::Vertex(_) if i + 1 < n_events => {
                    component_edges.push(edges.len());
                    edges.push(Edge {
                        component,
                        arcs: Vec::new(),
                    });
                }
                _ => {}
            }
        }
        components.push(Component {
            events,
            edges: component_edges,
        });
    }

    for _ in 0..d.free_loops() {
        let component = components.len();
        components.push(Component {
            events: Vec::new(),
            edges: vec![edges.len()],
        });
        edges.push(Edge {
            component,
            arcs: Vec::new(),
        });
    }

    let virtual_incidences = d
        .crossings()
        .iter()
        .filter(|c| c.kind == CrossingKind::Virtual)
        .map(|c| VirtualIncidence {
            crossing: c.id,
            edges: (arc_edge[c.arc(Port::S1In).0], arc_edge[c.arc(Port::S2In).0]),
        })
        .collect();

    MagneticGraph {
        components,
        edges,
        vertices,
        virtual_incidences,
    }
}

/// Per-state quantities entering the state sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateStats {
    /// Negative minus positive classical crossings resolved oriented.
    pub a: i64,
    /// Negative minus positive classical crossings resolved disoriented.
    pub b: i64,
    /// Singular crossings resolved oriented.
    pub alpha: u32,
    /// Singular crossings resolved disoriented.
    pub beta: u32,
    pub n_components: u32,
    pub parity: Parity,
}

pub fn stats(d: &Diagram, st: &State, g: &MagneticGraph, parity: Parity) -> StateStats {
    let mut out = StateStats {
        a: 0,
        b: 0,
        alpha: 0,
        beta: 0,
        n_components: g.n_components() as u32,
        parity,
    };
    for (slot, &ci) in d.resolvable().iter().enumerate() {
        let kind = d.crossings()[ci].kind;
        match (kind, st.get(slot)) {
            (CrossingKind::Singular, Resolution::Oriented) => out.alpha += 1,
            (CrossingKind::Singular, Resolution::Disoriented) => out.beta += 1,
            // a negative crossing counts +1, a positive one -1
            (k, Resolution::Oriented) => out.a -= k.sign(),
            (k, Resolution::Disoriented) => out.b -= k.sign(),
        }
    }
    out
}
