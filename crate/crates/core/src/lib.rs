//! Post-detection analytics for underwater survey imagery.
//!
//! The pipeline stages are:
//!
//! 1. **dataset** – normalized-box label parsing, manifest merge/split,
//!    integrity scanning, and dataset statistics.
//! 2. **detect** – detection ingest, confidence filtering, crop extraction,
//!    and evaluation metrics (IoU, precision, recall, mAP@0.5).
//! 3. **embed** – fixed-length feature vectors for crops, via the built-in
//!    hue/gradient descriptor or externally supplied vectors.
//! 4. **reduce** – PCA fit/transform with fixed-count or cumulative
//!    explained-variance component selection.
//! 5. **cluster** – k-means++ seeding, Lloyd iteration, silhouette-scored
//!    k selection, and assignment of new vectors to fitted clusters.
//! 6. **geo** – survey-track simulation, detection geo-tagging, GeoJSON and
//!    self-contained HTML map emission.
//! 7. **report** – prompt construction and a chat-completion client with
//!    content-addressed response caching and a deterministic offline mock.

pub mod cluster;
pub mod dataset;
pub mod detect;
pub mod embed;
pub mod geo;
pub mod reduce;
pub mod report;
