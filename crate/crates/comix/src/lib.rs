//! Unified tooling for comic-page annotation datasets.
//!
//! The crate revolves around one canonical in-memory model, [`UcaBook`],
//! with three layers around it:
//!
//! * [`adapters`] parse dataset-native layouts (Manga109 XML, DCM text
//!   files, eBDtheque SVG, COCO JSON, YOLO label trees) into books;
//! * [`convert`] emits books as COCO JSON, YOLO label trees, or CVAT XML;
//! * [`eval`] scores detection predictions against COCO-format ground
//!   truth (IoU matching, PR curves, AP/mAP, AR at detection budgets).
//!
//! Geometry and the metric kernels are generic over the floating-point
//! scalar (see [`scalar::Scalar`]); everything file-facing uses the `f64`
//! aliases defined at the crate root ([`Coord`], [`BBox`], [`Polygon`]).

pub mod adapters;
pub mod convert;
pub mod eval;
pub mod geom;
pub mod model;
pub mod scalar;
pub mod uca;
pub mod validate;

/// Pixel coordinate type used by the domain model and all file formats.
pub type Coord = f64;

/// Axis-aligned box in page pixels, top-left origin.
pub type BBox = geom::BBox<Coord>;

/// Polygon in page pixels (at least three vertices).
pub type Polygon = geom::Polygon<Coord>;

pub use model::{
    AnnotationClass, AnnotationObject, CharacterEntry, SourceDataset, SpeakerLink, StoryEntry,
    UcaBook, UcaPage,
};
pub use validate::{validate_book, RuleCode, ValidationIssue, ValidationReport};
