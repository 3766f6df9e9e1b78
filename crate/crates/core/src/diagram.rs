//! Oriented virtual singular link diagrams as abstract 4-valent structures.
//!
//! A crossing is a transverse double point of two oriented strands. Strand 1
//! enters on `s1_in` and leaves on `s1_out`, strand 2 likewise. Arcs join an
//! out-port of one crossing to an in-port of another. Over/under information
//! of a classical crossing is folded into its sign.
//!
//! The text format is line based:
//!
//! ```text
//! # comment
//! crossing <id> <P|N|S|V> <s1_in> <s1_out> <s2_in> <s2_out>
//! loops <count>
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossingKind {
    Positive,
    Negative,
    Singular,
    Virtual,
}

impl CrossingKind {
    pub fn code(self) -> char {
        match self {
            CrossingKind::Positive => 'P',
            CrossingKind::Negative => 'N',
            CrossingKind::Singular => 'S',
            CrossingKind::Virtual => 'V',
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "P" => Some(CrossingKind::Positive),
            "N" => Some(CrossingKind::Negative),
            "S" => Some(CrossingKind::Singular),
            "V" => Some(CrossingKind::Virtual),
            _ => None,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, CrossingKind::Positive | CrossingKind::Negative)
    }

    /// Classical and singular crossings get resolved; virtual ones persist.
    pub fn is_resolvable(self) -> bool {
        self != CrossingKind::Virtual
    }

    /// +1 / -1 for classical crossings, 0 otherwise.
    pub fn sign(self) -> i64 {
        match self {
            CrossingKind::Positive => 1,
            CrossingKind::Negative => -1,
            _ => 0,
        }
    }
}

/// Index of an arc inside one [`Diagram`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcId(pub usize);

/// The four local ports of a crossing, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Port {
    S1In = 0,
    S1Out = 1,
    S2In = 2,
    S2Out = 3,
}

impl Port {
    pub const ALL: [Port; 4] = [Port::S1In, Port::S1Out, Port::S2In, Port::S2Out];

    pub fn is_in(self) -> bool {
        matches!(self, Port::S1In | Port::S2In)
    }

    /// The port on the far side of the same strand.
    pub fn straight(self) -> Port {
        match self {
            Port::S1In => Port::S1Out,
            Port::S1Out => Port::S1In,
            Port::S2In => Port::S2Out,
            Port::S2Out => Port::S2In,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PortRef {
    /// Position of the crossing in [`Diagram::crossings`].
    pub crossing: usize,
    pub port: Port,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: u32,
    pub kind: CrossingKind,
    /// Arcs at `[s1_in, s1_out, s2_in, s2_out]`.
    pub ports: [ArcId; 4],
}

impl Crossing {
    pub fn arc(&self, port: Port) -> ArcId {
        self.ports[port as usize]
    }
}

/// Whether an arc occurrence is as an in-port or an out-port.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PortRole {
    In,
    Out,
}

impl fmt::Display for PortRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PortRole::In => "in-port",
            PortRole::Out => "out-port",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("crossing id {0} is used more than once")]
    DuplicateCrossingId(u32),
    #[error("arc {arc:?} is used as an {role} at crossings {first} and {second}")]
    DuplicatePort {
        arc: String,
        role: PortRole,
        first: u32,
        second: u32,
    },
    #[error("arc {arc:?} at crossing {crossing} never appears as an {missing}")]
    DanglingArc {
        arc: String,
        missing: PortRole,
        crossing: u32,
    },
}

/// An unvalidated crossing with named arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCrossing {
    pub id: u32,
    pub kind: CrossingKind,
    pub arcs: [String; 4],
}

impl RawCrossing {
    pub fn new(id: u32, kind: CrossingKind, arcs: [&str; 4]) -> Self {
        Self {
            id,
            kind,
            arcs: arcs.map(str::to_owned),
        }
    }
}

/// An unvalidated diagram, as read from text or assembled by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDiagram {
    pub crossings: Vec<RawCrossing>,
    pub free_loops: usize,
}

/// Checks that every arc occurs exactly once as an out-port and once as an
/// in-port, and that crossing ids are unique. Reports the first violation.
pub fn validate(raw: &RawDiagram) -> Result<(), DiagramError> {
    let mut sorted: Vec<&RawCrossing> = raw.crossings.iter().collect();
    sorted.sort_by_key(|c| c.id);
    for pair in sorted.windows(2) {
        if pair[0].id == pair[1].id {
            return Err(DiagramError::DuplicateCrossingId(pair[0].id));
        }
    }

    let mut outs: HashMap<&str, u32> = HashMap::new();
    let mut ins: HashMap<&str, u32> = HashMap::new();
    for c in &sorted {
        for port in Port::ALL {
            let arc = c.arcs[port as usize].as_str();
            let (seen, role) = if port.is_in() {
                (&mut ins, PortRole::In)
            } else {
                (&mut outs, PortRole::Out)
            };
            if let Some(first) = seen.insert(arc, c.id) {
                return Err(DiagramError::DuplicatePort {
                    arc: arc.to_owned(),
                    role,
                    first,
                    second: c.id,
                });
            }
        }
    }
    for c in &sorted {
        for port in Port::ALL {
            let arc = c.arcs[port as usize].as_str();
            let (other, missing) = if port.is_in() {
                (&outs, PortRole::Out)
            } else {
                (&ins, PortRole::In)
            };
            if !other.contains_key(arc) {
                return Err(DiagramError::DanglingArc {
                    arc: arc.to_owned(),
                    missing,
                    crossing: c.id,
                });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub classical: usize,
    pub singular: usize,
    pub virtual_: usize,
    pub writhe: i64,
}

/// A validated diagram. Crossings are kept sorted by id.
#[derive(Clone, Debug)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    arc_names: Vec<String>,
    free_loops: usize,
    heads: Vec<PortRef>,
    tails: Vec<PortRef>,
    resolvable: Vec<usize>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.arc_names == other.arc_names && self.free_loops == other.free_loops
    }
}

impl Eq for Diagram {}

impl Diagram {
    pub fn empty() -> Self {
        Self::from_raw(&RawDiagram::default()).expect("empty diagram is valid")
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Self::from_raw(&RawDiagram {
            crossings: Vec::new(),
            free_loops: n,
        })
        .expect("unlink is valid")
    }

    /// Validates a raw diagram and assigns arc indices in order of first
    /// appearance (crossings by id, ports in storage order).
    pub fn from_raw(raw: &RawDiagram) -> Result<Self, DiagramError> {
        validate(raw)?;
        let mut sorted = raw.crossings.clone();
        sorted.sort_by_key(|c| c.id);

        let mut index: HashMap<String, ArcId> = HashMap::new();
        let mut arc_names = Vec::new();
        let mut crossings = Vec::with_capacity(sorted.len());
        for c in &sorted {
            let ports = [0, 1, 2, 3].map(|i| {
                let name = &c.arcs[i];
                *index.entry(name.clone()).or_insert_with(|| {
                    arc_names.push(name.clone());
                    ArcId(arc_names.len() - 1)
                })
            });
            crossings.push(Crossing {
                id: c.id,
                kind: c.kind,
                ports,
            });
        }
        Ok(Self::assemble(crossings, arc_names, raw.free_loops))
    }

    fn assemble(crossings: Vec<Crossing>, arc_names: Vec<String>, free_loops: usize) -> Self {
        let placeholder = PortRef {
            crossing: usize::MAX,
            port: Port::S1In,
        };
        let mut heads = vec![placeholder; arc_names.len()];
        let mut tails = vec![placeholder; arc_names.len()];
        for (ci, c) in crossings.iter().enumerate() {
            for port in Port::ALL {
                let slot = PortRef { crossing: ci, port };
                if port.is_in() {
                    heads[c.arc(port).0] = slot;
                } else {
                    tails[c.arc(port).0] = slot;
                }
            }
        }
        let resolvable = crossings
            .iter()
            .enumerate()
            .filter(|(_, c)| c.kind.is_resolvable())
            .map(|(i, _)| i)
            .collect();
        Self {
            crossings,
            arc_names,
            free_loops,
            heads,
            tails,
            resolvable,
        }
    }

    pub fn to_raw(&self) -> RawDiagram {
        RawDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| RawCrossing {
                    id: c.id,
                    kind: c.kind,
                    arcs: c.ports.map(|a| self.arc_names[a.0].clone()),
                })
                .collect(),
            free_loops: self.free_loops,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_by_id(&self, id: u32) -> Option<&Crossing> {
        self.crossings
            .binary_search_by_key(&id, |c| c.id)
            .ok()
            .map(|i| &self.crossings[i])
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        self.arc_names.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = ArcId> {
        (0..self.arc_names.len()).map(ArcId)
    }

    pub fn arc_name(&self, arc: ArcId) -> &str {
        &self.arc_names[arc.0]
    }

    pub fn arc_by_name(&self, name: &str) -> Option<ArcId> {
        self.arc_names.iter().position(|n| n == name).map(ArcId)
    }

    /// The in-port where `arc` ends.
    pub fn head(&self, arc: ArcId) -> PortRef {
        self.heads[arc.0]
    }

    /// The out-port where `arc` starts.
    pub fn tail(&self, arc: ArcId) -> PortRef {
        self.tails[arc.0]
    }

    /// Positions (in [`Self::crossings`]) of the classical and singular
    /// crossings, in id order. State bit `i` refers to `resolvable()[i]`.
    pub fn resolvable(&self) -> &[usize] {
        &self.resolvable
    }

    pub fn counts(&self) -> Counts {
        let mut counts = Counts::default();
        for c in &self.crossings {
            match c.kind {
                CrossingKind::Positive | CrossingKind::Negative => {
                    counts.classical += 1;
                    counts.writhe += c.kind.sign();
                }
                CrossingKind::Singular => counts.singular += 1,
                CrossingKind::Virtual => counts.virtual_ += 1,
            }
        }
        counts
    }

    /// Number of closed curves obtained by passing straight through every
    /// crossing, plus free loops.
    pub fn link_components(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    /// The underlying closed curves as cyclic arc sequences.
    pub fn strand_cycles(&self) -> Vec<Vec<ArcId>> {
        let mut seen = vec![false; self.arc_count()];
        let mut cycles = Vec::new();
        for start in self.arcs() {
            if seen[start.0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut arc = start;
            while !seen[arc.0] {
                seen[arc.0] = true;
                cycle.push(arc);
                let head = self.head(arc);
                arc = self.crossings[head.crossing].arc(head.port.straight());
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Same diagram with arcs renamed `0, 1, 2, ...` in order of appearance.
    pub fn relabeled(&self) -> Self {
        let mut out = self.clone();
        out.arc_names = (0..self.arc_count()).map(|i| i.to_string()).collect();
        out
    }

    /// True when the diagrams agree up to renaming arcs.
    pub fn same_up_to_relabeling(&self, other: &Self) -> bool {
        self.relabeled() == other.relabeled()
    }

    pub fn with_kind(&self, id: u32, kind: CrossingKind) -> Option<Self> {
        let pos = self.crossings.iter().position(|c| c.id == id)?;
        let mut out = self.clone();
        out.crossings[pos].kind = kind;
        out.resolvable = out
            .crossings
            .iter()
            .enumerate()
            .filter(|(_, c)| c.kind.is_resolvable())
            .map(|(i, _)| i)
            .collect();
        Some(out)
    }

    pub fn max_crossing_id(&self) -> Option<u32> {
        self.crossings.last().map(|c| c.id)
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        Self::from_raw(&parse_raw(text)?)
    }

    /// Text form, crossings sorted by id.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let names = c.ports.map(|a| self.arc_names[a.0].as_str());
            out.push_str(&format!(
                "crossing {} {} {} {} {} {}\n",
                c.id,
                c.kind.code(),
                names[0],
                names[1],
                names[2],
                names[3]
            ));
        }
        if self.free_loops > 0 || self.crossings.is_empty() {
            out.push_str(&format!("loops {}\n", self.free_loops));
        }
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Parses the text format without validating the arc structure.
pub fn parse_raw(text: &str) -> Result<RawDiagram, DiagramError> {
    let mut raw = RawDiagram::default();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let syntax = |message: String| DiagramError::Syntax { line: line_no, message };
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, rest)) = tokens.split_first() else {
            continue;
        };
        match keyword {
            "crossing" => {
                let [id, kind, a, b, c, d] = rest else {
                    return Err(syntax(format!(
                        "expected `crossing <id> <P|N|S|V> <s1_in> <s1_out> <s2_in> <s2_out>`, got {} fields",
                        rest.len()
                    )));
                };
                let id: u32 = id.parse().map_err(|_| syntax(format!("invalid crossing id {id:?}")))?;
                let kind =
                    CrossingKind::from_code(kind).ok_or_else(|| syntax(format!("invalid crossing kind {kind:?}")))?;
                raw.crossings.push(RawCrossing::new(id, kind, [a, b, c, d]));
            }
            "loops" | "loop" => {
                let [count] = rest else {
                    return Err(syntax("expected `loops <count>`".into()));
                };
                let count: usize = count
                    .parse()
                    .map_err(|_| syntax(format!("invalid loop count {count:?}")))?;
                raw.free_loops += count;
            }
            other => return Err(syntax(format!("unknown directive {other:?}"))),
        }
    }
    Ok(raw)
}

/// `d1 ⊔ d2`. Arcs of `d2` that clash with `d1` get primed names and its
/// crossing ids are shifted past those of `d1`.
pub fn disjoint_union(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut raw = d1.to_raw();
    let offset = d1.max_crossing_id().unwrap_or(0);
    let mut taken: BTreeSet<String> = d1.arc_names.iter().cloned().collect();
    let mut rename: BTreeMap<&str, String> = BTreeMap::new();
    for name in &d2.arc_names {
        let mut fresh = name.clone();
        while taken.contains(&fresh) {
            fresh.push('\'');
        }
        taken.insert(fresh.clone());
        rename.insert(name, fresh);
    }
    for c in d2.crossings() {
        raw.crossings.push(RawCrossing {
            id: c.id + offset,
            kind: c.kind,
            arcs: c.ports.map(|a| rename[d2.arc_name(a)].clone()),
        });
    }
    raw.free_loops += d2.free_loops;
    Diagram::from_raw(&raw).expect("union of valid diagrams is valid")
}
