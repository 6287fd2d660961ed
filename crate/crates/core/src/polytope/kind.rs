use std::fmt;
use std::str::FromStr;

use crate::exact::ExactScalar;

/// The six convex regular 4-polytopes. The 16-cell is carried only as the
/// negative control: its square edge figure obstructs the double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolytopeKind {
    Cell5,
    Cell8,
    Cell16,
    Cell24,
    Cell120,
    Cell600,
}

impl PolytopeKind {
    pub const ALL: [PolytopeKind; 6] = [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell16,
        PolytopeKind::Cell24,
        PolytopeKind::Cell120,
        PolytopeKind::Cell600,
    ];

    /// The five kinds whose edge figures are odd polygons.
    pub const ADMISSIBLE: [PolytopeKind; 5] = [
        PolytopeKind::Cell5,
        PolytopeKind::Cell8,
        PolytopeKind::Cell24,
        PolytopeKind::Cell120,
        PolytopeKind::Cell600,
    ];

    pub fn schlafli(self) -> (u32, u32, u32) {
        match self {
            PolytopeKind::Cell5 => (3, 3, 3),
            PolytopeKind::Cell8 => (4, 3, 3),
            PolytopeKind::Cell16 => (3, 3, 4),
            PolytopeKind::Cell24 => (3, 4, 3),
            PolytopeKind::Cell120 => (5, 3, 3),
            PolytopeKind::Cell600 => (3, 3, 5),
        }
    }

    /// Number of facets meeting cyclically around each edge.
    pub fn edge_figure(self) -> usize {
        self.schlafli().2 as usize
    }

    pub fn vertex_count(self) -> usize {
        match self {
            PolytopeKind::Cell5 => 5,
            PolytopeKind::Cell8 => 16,
            PolytopeKind::Cell16 => 8,
            PolytopeKind::Cell24 => 24,
            PolytopeKind::Cell120 => 600,
            PolytopeKind::Cell600 => 120,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            PolytopeKind::Cell5 => 10,
            PolytopeKind::Cell8 => 32,
            PolytopeKind::Cell16 => 24,
            PolytopeKind::Cell24 => 96,
            PolytopeKind::Cell120 => 1200,
            PolytopeKind::Cell600 => 720,
        }
    }

    pub fn cell_count(self) -> usize {
        match self {
            PolytopeKind::Cell5 => 5,
            PolytopeKind::Cell8 => 8,
            PolytopeKind::Cell16 => 16,
            PolytopeKind::Cell24 => 24,
            PolytopeKind::Cell120 => 120,
            PolytopeKind::Cell600 => 600,
        }
    }

    /// Valency of every vertex (vertex-figure vertex count).
    pub fn valency(self) -> usize {
        match self {
            PolytopeKind::Cell5 => 4,
            PolytopeKind::Cell8 => 4,
            PolytopeKind::Cell16 => 6,
            PolytopeKind::Cell24 => 8,
            PolytopeKind::Cell120 => 4,
            PolytopeKind::Cell600 => 12,
        }
    }

    pub fn edge_length_sq(self) -> ExactScalar {
        match self {
            PolytopeKind::Cell5 => ExactScalar::from_ratio(5, 2),
            PolytopeKind::Cell8 => ExactScalar::from_int(4),
            PolytopeKind::Cell16 => ExactScalar::from_int(2),
            PolytopeKind::Cell24 => ExactScalar::one(),
            // (3 - sqrt5)^2 = 14 - 6 sqrt5
            PolytopeKind::Cell120 => {
                ExactScalar::from_int(14) - ExactScalar::sqrt5_ratio(6, 1)
            }
            // phi^-2 = (3 - sqrt5)/2
            PolytopeKind::Cell600 => {
                ExactScalar::from_ratio(3, 2) - ExactScalar::sqrt5_ratio(1, 2)
            }
        }
    }

    pub fn vertex_norm_sq(self) -> ExactScalar {
        match self {
            PolytopeKind::Cell5 | PolytopeKind::Cell16 | PolytopeKind::Cell24
            | PolytopeKind::Cell600 => ExactScalar::one(),
            PolytopeKind::Cell8 => ExactScalar::from_int(4),
            PolytopeKind::Cell120 => ExactScalar::from_int(8),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PolytopeKind::Cell5 => "5-cell",
            PolytopeKind::Cell8 => "8-cell",
            PolytopeKind::Cell16 => "16-cell",
            PolytopeKind::Cell24 => "24-cell",
            PolytopeKind::Cell120 => "120-cell",
            PolytopeKind::Cell600 => "600-cell",
        }
    }
}

impl fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolytopeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "5-cell" | "5cell" | "cell5" | "5" => Ok(PolytopeKind::Cell5),
            "8-cell" | "8cell" | "cell8" | "8" => Ok(PolytopeKind::Cell8),
            "16-cell" | "16cell" | "cell16" | "16" => Ok(PolytopeKind::Cell16),
            "24-cell" | "24cell" | "cell24" | "24" => Ok(PolytopeKind::Cell24),
            "120-cell" | "120cell" | "cell120" | "120" => Ok(PolytopeKind::Cell120),
            "600-cell" | "600cell" | "cell600" | "600" => Ok(PolytopeKind::Cell600),
            other => Err(format!("unknown polytope kind: {other}")),
        }
    }
}
