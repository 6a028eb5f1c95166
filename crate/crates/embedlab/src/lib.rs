//! A laboratory for finite metric spaces and Fréchet embeddings.
//!
//! The crate builds exact (rational-valued) finite metric spaces, classifies
//! them (ultrametric / k-HST), measures the distortion of embeddings into
//! ℓ_p, and provides the machinery around a family of tree-with-tails spaces
//! on which distance-function embeddings can be stress-tested:
//!
//! * [`metric`] — exact finite metrics, ℓ_p images, distortion reports.
//! * [`tree`] — rooted weighted trees, lca queries, spanned subtrees,
//!   skeletons, and the tree ⇄ ultrametric correspondence.
//! * [`construction`] — the binary-tree space `X`, the geometric line space
//!   `Y`, and their amalgam `Z`, plus a parameter chooser.
//! * [`frechet`] — coordinate systems (classical, Bourgain), evaluation into
//!   ℓ_p, and the tail/splitting lower-bound calculus.
//! * [`ramsey`] — tail-rich subset extraction and a brute-force subset
//!   distortion search.
//! * [`l1dom`] — random ±3/8 line embeddings of HSTs, exact expectations,
//!   and the dominated-line-metric equivalence certificate for ultrametrics.
//! * [`experiment`] — a grid runner that ties everything together and emits
//!   CSV reports.

pub mod construction;
pub mod experiment;
pub mod frechet;
pub mod l1dom;
pub mod metric;
pub mod ramsey;
pub mod rational;
pub mod tree;

pub use construction::{build_x, build_y, build_z, choose_params, ChosenParams, ZSpace};
pub use frechet::{
    beta_gamma, bourgain_system, distortion_lower_bound, evaluate_embedding, frechet_classical,
    split_sum, split_test, tail_miss_fraction, CoordinateSystem, LowerBoundReport, SplitContext,
    TailAnalysis,
};
pub use l1dom::{
    certify_l1dom, expected_line_metric, monte_carlo_line_metric, sample_line_embedding,
    CertificateReport, DominatedCombination, SignedLineEmbedding,
};
pub use metric::{
    classify_metric, distortion, validate_metric, DistortionReport, EmbeddingImage, FiniteMetric,
    LpExponent, MetricClass,
};
pub use ramsey::{brute_force_best_subset, extract_subset, BestSubset, ExtractionResult};
pub use tree::{ultrametric_to_k_hst, Tree};
