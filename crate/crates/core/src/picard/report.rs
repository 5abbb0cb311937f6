//! Structured report payloads shared with the command-line surface.

use crate::exactalg::FgAbGroup;

/// A labeled presentation: free ranks, torsion pieces, and which result
/// produced each piece, ready for rendering.
#[derive(Clone, Debug)]
pub struct PicardReport {
    pub title: String,
    pub free_rank: Option<usize>,
    pub group: Option<FgAbGroup>,
    pub pieces: Vec<(String, String)>,
    pub tags: Vec<String>,
    pub notes: Vec<String>,
    pub assumptions: Vec<String>,
}

impl PicardReport {
    pub fn new(title: &str) -> PicardReport {
        PicardReport {
            title: title.to_string(),
            free_rank: None,
            group: None,
            pieces: Vec::new(),
            tags: Vec::new(),
            notes: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn piece(mut self, label: &str, value: impl ToString) -> Self {
        self.pieces.push((label.to_string(), value.to_string()));
        self
    }

    pub fn tag(mut self, t: &str) -> Self {
        self.tags.push(t.to_string());
        self
    }

    pub fn note(mut self, t: &str) -> Self {
        self.notes.push(t.to_string());
        self
    }

    pub fn assume(mut self, t: &str) -> Self {
        self.assumptions.push(t.to_string());
        self
    }
}

/// Applicability of the class-group identification for the semistable
/// moduli space.
#[derive(Clone, Debug)]
pub struct ClReport {
    pub applicable: bool,
    /// Which hypothesis grants applicability, when one does.
    pub condition: Option<String>,
    /// Whether genus + points >= 3 (the moduli of curves is generically a
    /// variety).
    pub genus_points_ok: bool,
    /// Genus-2, characteristic-zero caveat: a nontrivial homomorphism to
    /// PGL_2 would break the codimension estimate; reported, not decided.
    pub pgl2_caveat: bool,
    /// Whether the adequate moduli space is covered by published existence
    /// results for these parameters.
    pub moduli_space_known: bool,
    /// Free rank of the rigidified relative Picard group, when applicable.
    pub rig_rank: Option<usize>,
}
