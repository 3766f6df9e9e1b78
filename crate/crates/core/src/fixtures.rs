//! Built-in diagrams, and closures of virtual singular braids.

use crate::diagram::{CrossingKind, Diagram, RawCrossing, RawDiagram};

/// One braid letter: a crossing between strand positions `position` and
/// `position + 1` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub position: usize,
    pub kind: CrossingKind,
}

/// Closure of a braid word on `strands` strands. Every closure is planar.
///
/// Strand 1 of each crossing runs from position `i` to `i + 1`. Untouched
/// positions close up into free loops.
pub fn braid_closure(strands: usize, word: &[Letter]) -> Diagram {
    let mut current: Vec<usize> = (0..strands).collect();
    let mut next_arc = strands;
    let mut crossings = Vec::with_capacity(word.len());
    for letter in word {
        let p = letter.position;
        assert!(
            p + 1 < strands,
            "generator {} out of range for {strands} strands",
            p + 1
        );
        let (i1, i2) = (current[p], current[p + 1]);
        let (o1, o2) = (next_arc, next_arc + 1);
        next_arc += 2;
        crossings.push((letter.kind, [i1, o1, i2, o2]));
        current[p + 1] = o1;
        current[p] = o2;
    }
    let mut alias: Vec<usize> = (0..next_arc).collect();
    let mut free_loops = 0;
    for (start, &end) in current.iter().enumerate() {
        if end == start {
            free_loops += 1;
        } else {
            alias[end] = start;
        }
    }
    let raw = RawDiagram {
        crossings: crossings
            .into_iter()
            .enumerate()
            .map(|(i, (kind, arcs))| RawCrossing {
                id: i as u32 + 1,
                kind,
                arcs: arcs.map(|a| alias[a].to_string()),
            })
            .collect(),
        free_loops,
    };
    Diagram::from_raw(&raw).expect("braid closures are valid")
}

/// Parses a word such as `"P1 N2 S1 V2"`: kind letter then 1-based generator.
pub fn parse_word(word: &str) -> Option<Vec<Letter>> {
    word.split_whitespace()
        .map(|token| {
            let (kind, index) = token.split_at(1);
            let kind = CrossingKind::from_code(kind)?;
            let index: usize = index.parse().ok()?;
            (index >= 1).then(|| Letter {
                position: index - 1,
                kind,
            })
        })
        .collect()
}

/// Closure of a braid word in the [`parse_word`] syntax.
pub fn braid(strands: usize, word: &str) -> Diagram {
    let letters = parse_word(word).unwrap_or_else(|| panic!("bad braid word {word:?}"));
    braid_closure(strands, &letters)
}

fn fixed(text: &str) -> Diagram {
    Diagram::parse(text).expect("built-in fixture is valid")
}

pub fn unknot() -> Diagram {
    Diagram::unlink(1)
}

pub fn positive_kinked_unknot() -> Diagram {
    fixed("crossing 1 P a b b a\n")
}

pub fn negative_kinked_unknot() -> Diagram {
    fixed("crossing 1 N a b b a\n")
}

pub fn virtual_kinked_unknot() -> Diagram {
    fixed("crossing 1 V a b b a\n")
}

/// Two curves joined by two positive crossings.
pub fn hopf() -> Diagram {
    braid(2, "P1 P1")
}

/// Right-handed trefoil, three positive crossings.
pub fn trefoil() -> Diagram {
    braid(2, "P1 P1 P1")
}

pub fn figure_eight() -> Diagram {
    braid(3, "P1 N2 P1 N2")
}

/// Hopf-like link with one positive and one singular crossing.
pub fn singular_hopf() -> Diagram {
    braid(2, "P1 S1")
}

/// Two classical crossings and one virtual crossing.
pub fn virtual_trefoil() -> Diagram {
    braid(2, "P1 P1 V1")
}

pub fn singular_trefoil() -> Diagram {
    braid(2, "P1 P1 S1")
}

/// One-component diagram with one negative classical crossing (id 1), one
/// singular crossing (id 2) and two virtual crossings. Its four states give
/// `A^12 h - A^4 h - A^6 - 2 A^2 - A^-2`.
pub const EXAMPLE1_TEXT: &str = "\
# virtual singular figure-eight: 1 negative, 1 singular, 2 virtual crossings
crossing 1 N 7 0 4 1
crossing 2 S 0 2 1 3
crossing 3 V 2 4 3 5
crossing 4 V 5 6 6 7
";

pub fn example1() -> Diagram {
    fixed(EXAMPLE1_TEXT)
}

/// Resolved all-disoriented, gives four components: a circle with a virtual
/// self-crossing of parity +1, one with two crossings of parity -1, a
/// two-vertex circle and a free loop.
pub fn four_component_state_diagram() -> Diagram {
    fixed(
        "crossing 1 V a1 b1 b1 a1\n\
         crossing 2 P c1 m1 m3 c2\n\
         crossing 3 V m1 m2 c2 c3\n\
         crossing 4 V m2 m3 c3 c1\n\
         crossing 5 N d1 d2 d2 d1\n\
         loops 1\n",
    )
}

/// A knot-ish closure with `resolvable` classical/singular crossings plus a
/// virtual crossing after every fourth letter, on four strands.
pub fn scale_diagram(resolvable: usize) -> Diagram {
    let kinds = [CrossingKind::Positive, CrossingKind::Singular, CrossingKind::Negative];
    let mut word = Vec::new();
    for i in 0..resolvable {
        word.push(Letter {
            position: i % 3,
            kind: kinds[i % kinds.len()],
        });
        if i % 4 == 3 {
            word.push(Letter {
                position: (i + 1) % 3,
                kind: CrossingKind::Virtual,
            });
        }
    }
    braid_closure(4, &word)
}

/// The fixture suite used by tests and the CLI, by name.
pub fn all() -> Vec<(&'static str, Diagram)> {
    vec![
        ("unknot", unknot()),
        ("two-unknots", Diagram::unlink(2)),
        ("positive-kink", positive_kinked_unknot()),
        ("negative-kink", negative_kinked_unknot()),
        ("virtual-kink", virtual_kinked_unknot()),
        ("hopf", hopf()),
        ("trefoil", trefoil()),
        ("figure-eight", figure_eight()),
        ("singular-hopf", singular_hopf()),
        ("virtual-trefoil", virtual_trefoil()),
        ("singular-trefoil", singular_trefoil()),
        ("example1", example1()),
        ("four-components", four_component_state_diagram()),
    ]
}

pub fn by_name(name: &str) -> Option<Diagram> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
}
