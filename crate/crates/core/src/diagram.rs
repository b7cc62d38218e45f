//! Combinatorial link diagrams: arcs joined at crossings.
//!
//! A crossing records one over-arc and an unordered pair of under-arcs.
//! Nothing here checks planar realizability; any combinatorial data that
//! satisfies the counting invariants is accepted, including "virtual"
//! diagrams that cannot be drawn in the plane.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One crossing: an over-arc and two under-arcs, stored sorted ascending.
///
/// The over-arc may coincide with one or both under-arcs (a kink).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under: [usize; 2],
}

impl Crossing {
    pub fn new(over: usize, under_a: usize, under_b: usize) -> Self {
        let under = if under_a <= under_b {
            [under_a, under_b]
        } else {
            [under_b, under_a]
        };
        Self { over, under }
    }

    /// The three arc slots: over, then the two unders.
    pub fn slots(&self) -> [usize; 3] {
        [self.over, self.under[0], self.under[1]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub name: String,
    pub arc_count: usize,
    #[serde(default)]
    pub free_circles: usize,
    pub crossings: Vec<Crossing>,
    /// Set by the generators for families whose diagrams are known (from
    /// the literature, not from this tool) to be crossing-minimal.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub claimed_minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ArcOutOfRange {
        crossing: usize,
        arc: usize,
    },
    /// An arc that ends at some crossing must end at exactly two.
    UnderCount {
        arc: usize,
        count: usize,
    },
    /// An arc with no under-occurrences that still passes over a crossing.
    /// Such a closed loop is neither a proper arc nor a free circle.
    OverOnlyArc {
        arc: usize,
    },
    FreeCircleCount {
        declared: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ArcOutOfRange { crossing, arc } => {
                write!(
                    f,
                    "crossing {crossing} references arc {arc}, which is out of range"
                )
            }
            Violation::UnderCount { arc, count } => {
                write!(f, "arc {arc} is an under-arc {count} time(s); expected 2")
            }
            Violation::OverOnlyArc { arc } => {
                write!(f, "arc {arc} passes over crossings but never ends at one")
            }
            Violation::FreeCircleCount { declared, found } => write!(
                f,
                "free_circles is {declared} but {found} arc(s) touch no crossing"
            ),
        }
    }
}

/// Outcome of [`Diagram::validate`]; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<(), DiagramError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(DiagramError::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("malformed diagram document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid diagram: {0}")]
    Invalid(ValidationReport),
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

impl Diagram {
    pub fn new(
        name: impl Into<String>,
        arc_count: usize,
        crossings: Vec<Crossing>,
        free_circles: usize,
    ) -> Self {
        Self {
            name: name.into(),
            arc_count,
            free_circles,
            crossings,
            claimed_minimal: false,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut under = vec![0usize; self.arc_count];
        let mut over = vec![0usize; self.arc_count];
        for (ci, c) in self.crossings.iter().enumerate() {
            let mut seen_bad = Vec::new();
            for arc in c.slots() {
                if arc >= self.arc_count && !seen_bad.contains(&arc) {
                    violations.push(Violation::ArcOutOfRange { crossing: ci, arc });
                    seen_bad.push(arc);
                }
            }
            if c.over < self.arc_count {
                over[c.over] += 1;
            }
            for &u in &c.under {
                if u < self.arc_count {
                    under[u] += 1;
                }
            }
        }
        let mut free = 0;
        for arc in 0..self.arc_count {
            match (under[arc], over[arc]) {
                (0, 0) => free += 1,
                (0, _) => violations.push(Violation::OverOnlyArc { arc }),
                (2, _) => {}
                (count, _) => violations.push(Violation::UnderCount { arc, count }),
            }
        }
        if free != self.free_circles {
            violations.push(Violation::FreeCircleCount {
                declared: self.free_circles,
                found: free,
            });
        }
        ValidationReport { violations }
    }

    /// True iff the arc/crossing incidence graph is connected and the
    /// diagram has no free circles. Assumes a valid diagram.
    pub fn is_connected(&self) -> bool {
        if self.free_circles > 0 || self.arc_count == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            for arc in c.slots() {
                uf.union(c.over, arc);
            }
        }
        uf.classes() == 1
    }

    /// Number of link components, traced through under-passes.
    ///
    /// The two under-arcs of a crossing are consecutive pieces of the same
    /// strand, so components are the classes of arcs joined that way; a
    /// free circle is a component on its own.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c.under[0], c.under[1]);
        }
        uf.classes()
    }

    /// Disjoint union; arc indices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.arc_count;
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other
                .crossings
                .iter()
                .map(|c| Crossing::new(c.over + shift, c.under[0] + shift, c.under[1] + shift)),
        );
        Diagram::new(
            format!("{} + {}", self.name, other.name),
            self.arc_count + other.arc_count,
            crossings,
            self.free_circles + other.free_circles,
        )
    }

    /// Parses and validates a diagram document.
    pub fn parse(text: &str) -> Result<Diagram, DiagramError> {
        let mut d: Diagram = serde_json::from_str(text)?;
        for c in &mut d.crossings {
            *c = Crossing::new(c.over, c.under[0], c.under[1]);
        }
        d.validate().into_result()?;
        Ok(d)
    }

    /// Compact JSON; field order is fixed and under-pairs are sorted.
    pub fn serialize(&self) -> String {
        let mut d = self.clone();
        for c in &mut d.crossings {
            *c = Crossing::new(c.over, c.under[0], c.under[1]);
        }
        serde_json::to_string(&d).expect("diagram serialization cannot fail")
    }
}

/// The standard 3-arc trefoil diagram.
pub fn trefoil() -> Diagram {
    Diagram::new(
        "trefoil",
        3,
        vec![
            Crossing::new(0, 1, 2),
            Crossing::new(1, 0, 2),
            Crossing::new(2, 0, 1),
        ],
        0,
    )
}

/// `count` unlinked circles with no crossings.
pub fn free_circles(count: usize) -> Diagram {
    Diagram::new(format!("{count} free circles"), count, Vec::new(), count)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL_DOC: &str = r#"{"name":"trefoil","arc_count":3,"free_circles":0,"crossings":[{"over":0,"under":[1,2]},{"over":1,"under":[0,2]},{"over":2,"under":[0,1]}]}"#;

    #[test]
    fn trefoil_is_valid_and_connected() {
        let t = trefoil();
        assert!(t.validate().is_valid());
        assert!(t.is_connected());
        assert_eq!(t.component_count(), 1);
    }

    #[test]
    fn lone_crossing_is_invalid() {
        let d = Diagram::new("lone", 3, vec![Crossing::new(0, 1, 2)], 0);
        let report = d.validate();
        assert!(report
            .violations
            .contains(&Violation::UnderCount { arc: 1, count: 1 }));
        assert!(report
            .violations
            .contains(&Violation::UnderCount { arc: 2, count: 1 }));
        assert!(report
            .violations
            .contains(&Violation::OverOnlyArc { arc: 0 }));
    }

    #[test]
    fn free_circles_are_valid_but_disconnected() {
        let d = free_circles(2);
        assert!(d.validate().is_valid());
        assert!(!d.is_connected());
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn free_circle_count_must_match() {
        let d = Diagram::new("bad", 2, Vec::new(), 1);
        assert_eq!(
            d.validate().violations,
            vec![Violation::FreeCircleCount {
                declared: 1,
                found: 2
            }]
        );
    }

    #[test]
    fn unions_are_disconnected() {
        let two = trefoil().disjoint_union(&trefoil());
        assert!(two.validate().is_valid());
        assert!(!two.is_connected());
        assert_eq!(two.component_count(), 2);

        let with_circle = trefoil().disjoint_union(&free_circles(1));
        assert!(with_circle.validate().is_valid());
        assert!(!with_circle.is_connected());
    }

    #[test]
    fn kinks_are_legal() {
        // one-crossing unknot: the arc passes over itself and ends there twice
        let d = Diagram::new("kink", 1, vec![Crossing::new(0, 0, 0)], 0);
        assert!(d.validate().is_valid());
        assert!(d.is_connected());
    }

    #[test]
    fn parse_trefoil_document() {
        let d = Diagram::parse(TREFOIL_DOC).unwrap();
        assert_eq!(d, trefoil());
        assert_eq!(d.serialize(), TREFOIL_DOC);
    }

    #[test]
    fn parse_sorts_under_pairs_and_defaults_free_circles() {
        let doc = r#"{"name":"t","arc_count":3,"crossings":[{"over":0,"under":[2,1]},{"over":1,"under":[2,0]},{"over":2,"under":[1,0]}]}"#;
        let d = Diagram::parse(doc).unwrap();
        assert_eq!(d.crossings, trefoil().crossings);
        assert_eq!(d.free_circles, 0);
    }

    #[test]
    fn out_of_range_arc_is_named() {
        let doc = r#"{"name":"x","arc_count":8,"crossings":[{"over":99,"under":[0,1]}]}"#;
        let err = Diagram::parse(doc).unwrap_err();
        match &err {
            DiagramError::Invalid(report) => {
                assert!(report.violations.contains(&Violation::ArcOutOfRange {
                    crossing: 0,
                    arc: 99
                }))
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(err.to_string().contains("arc 99"));
    }

    #[test]
    fn malformed_document_reports_position() {
        let err = Diagram::parse("{\"name\": \"x\",\n \"arc_count\": \"three\"}").unwrap_err();
        assert!(matches!(err, DiagramError::Parse(_)));
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn claimed_minimal_round_trips() {
        let mut d = trefoil();
        d.claimed_minimal = true;
        let text = d.serialize();
        assert!(text.ends_with(r#""claimed_minimal":true}"#));
        assert_eq!(Diagram::parse(&text).unwrap(), d);
    }
}
