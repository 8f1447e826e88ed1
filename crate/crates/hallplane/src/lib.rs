//! Exact computations with conics inherited by Hall planes.
//!
//! The Hall plane of order q² is obtained from the Desarguesian plane
//! AG(2, q²) by derivation: affine points are kept, and every line whose
//! slope lies in GF(q) ∪ {∞} is replaced by the family of translates of
//! GF(q)-subplanes through the derivation set. A conic of PG(2, q²) is then
//! no longer a conic, but its affine point set survives as a point set of
//! the Hall plane, and this crate measures exactly what remains of it:
//! secant line spectra, collinear triples, arc and completeness tests,
//! hyperoval extensions, and a battery of closed-form counts verified by
//! exhaustive enumeration over small fields.
//!
//! Start with the runnable examples (`cargo run --example …`):
//!
//! * `field_tour` — GF(q²) arithmetic, conjugation, characters, traces
//! * `hall_plane_basics` — derivation, line families, Baer subplanes
//! * `classify_conics` — ellipse/parabola/hyperbola with derivation-set data
//! * `secant_spectrum` — line-intersection spectra of inherited conics
//! * `inherited_arcs` — arc/completeness analysis and extension points
//! * `hyperoval_search` — exhaustive hyperoval extension for even q
//! * `sk_triangles` — inscribed-triangle counts behind the secant bounds
//! * `parabola_pencil` — parabolas through three collinear points
//! * `nbeta_roots` — rational-root counts of the governing cubic
//! * `normal_form` — Möbius normalization of quadratics over GF(q), q even
//! * `open_question_table` — spectrum statistics for small odd q
//!
//! The `hallcensus` binary exposes the same machinery as subcommands and
//! drives the full verification census.

pub mod census;
pub mod conic;
pub mod field;
pub mod inherited;
mod linalg;
pub mod oracles;
pub mod plane;

pub use census::{
    all_check_names, emit_open_question_table, run_census, verify_all, CensusConfig, CensusError,
    CensusReport, CheckResult, OpenQuestionRow, ReportFormat,
};
pub use conic::{
    Conic, ConicClass, ConicError, ConicKind, DerivationCounts, ExtensionRelation, PointPosition,
};
pub use field::{Field, FieldElement, FieldEmbedding, FieldError, FieldSpec};
pub use inherited::{
    ArcReport, BaerConicMeeting, ExtensionCandidate, HallDirection, SecantSpectrum,
};
pub use oracles::{
    FourthPoint, MoebiusMap, NormalizeError, ParabolaCount, TriangleCount,
};
pub use plane::{AffinePoint, DerivationSet, HallLine, HallPlane, ProjLine, ProjPoint};
