//! Dataset handling for normalized-box detection labels.
//!
//! Label files are UTF-8 text with one annotation per line,
//! `class cx cy w h [confidence]`, all coordinates normalized to the image
//! (center/size fractions). Manifests collect per-image records plus the
//! class-name table and round-trip as JSON.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of bins in each marginal coordinate histogram.
pub const HIST_BINS: usize = 50;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("{image_id} line {line}: {message}")]
    LabelParse {
        image_id: String,
        line: usize,
        message: String,
    },
    #[error("{image_id} line {line}: {source}")]
    LabelValidation {
        image_id: String,
        line: usize,
        #[source]
        source: BoxError,
    },
    #[error("missing image dimensions for {0} image id(s): {1:?}")]
    MissingDims(usize, Vec<String>),
    #[error("cannot split a manifest with fewer than 2 records (got {0})")]
    TooFewRecords(usize),
    #[error("train fraction must lie strictly between 0 and 1 (got {0})")]
    BadFraction(f64),
    #[error("duplicate image id `{0}` in manifest")]
    DuplicateImageId(String),
    #[error("record `{image_id}`: class id {class_id} does not index into {n_classes} class name(s)")]
    ClassIdOutOfRange {
        image_id: String,
        class_id: u32,
        n_classes: usize,
    },
    #[error("record `{image_id}`: image dimensions must be positive")]
    BadImageDims { image_id: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid manifest JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV read error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Box_(#[from] BoxError),
}

/// A bounding-box field failed validation.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("bbox field `{field}` out of range: {value}")]
pub struct BoxError {
    pub field: &'static str,
    pub value: f64,
}

/// Normalized center/size bounding box. All fields are fractions of the
/// image dimensions; construction enforces the range invariants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct BBox {
    pub cx: f64,
    pub cy: f64,
    pub w: f64,
    pub h: f64,
}

impl BBox {
    /// Validates `0 <= cx,cy <= 1`, `0 < w,h <= 1`, and that the box
    /// intersects the unit square.
    pub fn new(cx: f64, cy: f64, w: f64, h: f64) -> Result<Self, BoxError> {
        let check = |field: &'static str, value: f64, lo_open: bool| -> Result<(), BoxError> {
            let ok = value.is_finite() && value <= 1.0 && if lo_open { value > 0.0 } else { value >= 0.0 };
            if ok {
                Ok(())
            } else {
                Err(BoxError { field, value })
            }
        };
        check("cx", cx, false)?;
        check("cy", cy, false)?;
        check("w", w, true)?;
        check("h", h, true)?;
        // Intersection with the unit square; implied by the range checks but
        // kept explicit so the invariant survives future range changes.
        if cx - w / 2.0 >= 1.0 || cx + w / 2.0 <= 0.0 {
            return Err(BoxError { field: "cx", value: cx });
        }
        if cy - h / 2.0 >= 1.0 || cy + h / 2.0 <= 0.0 {
            return Err(BoxError { field: "cy", value: cy });
        }
        Ok(Self { cx, cy, w, h })
    }
}

impl TryFrom<[f64; 4]> for BBox {
    type Error = BoxError;
    fn try_from(v: [f64; 4]) -> Result<Self, BoxError> {
        BBox::new(v[0], v[1], v[2], v[3])
    }
}

impl From<BBox> for [f64; 4] {
    fn from(b: BBox) -> [f64; 4] {
        [b.cx, b.cy, b.w, b.h]
    }
}

/// One normalized box with a class id; detections carry a confidence,
/// ground truth does not.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Annotation {
    pub class_id: u32,
    pub bbox: BBox,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confidence: Option<f64>,
}

impl Annotation {
    pub fn new(class_id: u32, bbox: BBox) -> Self {
        Self { class_id, bbox, confidence: None }
    }

    pub fn with_confidence(class_id: u32, bbox: BBox, confidence: f64) -> Result<Self, BoxError> {
        if !(confidence.is_finite() && (0.0..=1.0).contains(&confidence)) {
            return Err(BoxError { field: "confidence", value: confidence });
        }
        Ok(Self { class_id, bbox, confidence: Some(confidence) })
    }
}

/// Origin of a record, used to disambiguate image ids on merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Deepfish,
    Ozfish,
    #[default]
    Other,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::Deepfish => write!(f, "deepfish"),
            Source::Ozfish => write!(f, "ozfish"),
            Source::Other => write!(f, "other"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Val,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageRecord {
    pub image_id: String,
    pub path: PathBuf,
    pub width_px: u32,
    pub height_px: u32,
    pub annotations: Vec<Annotation>,
    #[serde(default)]
    pub source: Source,
}

/// A collection of image records plus the class-name table they index into.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct DatasetManifest {
    pub class_names: Vec<String>,
    pub records: Vec<ImageRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
}

impl DatasetManifest {
    pub fn new(class_names: Vec<String>) -> Self {
        Self { class_names, records: Vec::new(), split: None }
    }

    /// Checks manifest-level invariants: unique image ids, class ids that
    /// index into `class_names`, positive image dimensions, and confidence
    /// ranges.
    pub fn validate(&self) -> Result<(), DatasetError> {
        let mut seen = HashSet::with_capacity(self.records.len());
        for rec in &self.records {
            if !seen.insert(rec.image_id.as_str()) {
                return Err(DatasetError::DuplicateImageId(rec.image_id.clone()));
            }
            if rec.width_px == 0 || rec.height_px == 0 {
                return Err(DatasetError::BadImageDims { image_id: rec.image_id.clone() });
            }
            for ann in &rec.annotations {
                if ann.class_id as usize >= self.class_names.len() {
                    return Err(DatasetError::ClassIdOutOfRange {
                        image_id: rec.image_id.clone(),
                        class_id: ann.class_id,
                        n_classes: self.class_names.len(),
                    });
                }
                if let Some(c) = ann.confidence {
                    if !(c.is_finite() && (0.0..=1.0).contains(&c)) {
                        return Err(BoxError { field: "confidence", value: c }.into());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn total_annotations(&self) -> usize {
        self.records.iter().map(|r| r.annotations.len()).sum()
    }

    pub fn to_json_string(&self) -> Result<String, DatasetError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json_str(text: &str) -> Result<Self, DatasetError> {
        let manifest: Self = serde_json::from_str(text)?;
        manifest.validate()?;
        Ok(manifest)
    }

    pub fn save(&self, path: &Path) -> Result<(), DatasetError> {
        std::fs::write(path, self.to_json_string()?)
            .map_err(|source| DatasetError::Io { path: path.to_path_buf(), source })
    }

    pub fn load(path: &Path) -> Result<Self, DatasetError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| DatasetError::Io { path: path.to_path_buf(), source })?;
        Self::from_json_str(&text)
    }
}

/// Parses a label file into annotations, one per non-empty line.
///
/// `image_id` is used only for error context. Lines hold 5 fields
/// (ground truth) or 6 (detections, trailing confidence).
pub fn parse_label_file(text: &str, image_id: &str) -> Result<Vec<Annotation>, DatasetError> {
    let mut annotations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 5 && fields.len() != 6 {
            return Err(DatasetError::LabelParse {
                image_id: image_id.to_string(),
                line,
                message: format!("expected 5 or 6 fields, found {}", fields.len()),
            });
        }
        let class_id: u32 = fields[0].parse().map_err(|_| DatasetError::LabelParse {
            image_id: image_id.to_string(),
            line,
            message: format!("invalid class id `{}`", fields[0]),
        })?;
        let mut nums = [0.0f64; 5];
        for (i, field) in fields[1..].iter().enumerate() {
            nums[i] = field.parse().map_err(|_| DatasetError::LabelParse {
                image_id: image_id.to_string(),
                line,
                message: format!("invalid number `{field}`"),
            })?;
        }
        let bbox = BBox::new(nums[0], nums[1], nums[2], nums[3]).map_err(|source| {
            DatasetError::LabelValidation { image_id: image_id.to_string(), line, source }
        })?;
        let annotation = if fields.len() == 6 {
            Annotation::with_confidence(class_id, bbox, nums[4]).map_err(|source| {
                DatasetError::LabelValidation { image_id: image_id.to_string(), line, source }
            })?
        } else {
            Annotation::new(class_id, bbox)
        };
        annotations.push(annotation);
    }
    Ok(annotations)
}

/// Renders annotations as label-file text with fixed 6-decimal coordinates.
/// Inverse of [`parse_label_file`] for values representable at 6 decimals.
pub fn write_label_file(annotations: &[Annotation]) -> String {
    let mut out = String::new();
    for ann in annotations {
        let b = ann.bbox;
        write!(out, "{} {:.6} {:.6} {:.6} {:.6}", ann.class_id, b.cx, b.cy, b.w, b.h).unwrap();
        if let Some(conf) = ann.confidence {
            write!(out, " {conf:.6}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Names the CSV columns holding the image id, class label, and pixel-space
/// corner coordinates of an external bounding-box table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColumnMapping {
    pub image_id: String,
    pub class_label: String,
    pub x_min: String,
    pub y_min: String,
    pub x_max: String,
    pub y_max: String,
}

impl Default for ColumnMapping {
    fn default() -> Self {
        Self {
            image_id: "image_id".into(),
            class_label: "label".into(),
            x_min: "x_min".into(),
            y_min: "y_min".into(),
            x_max: "x_max".into(),
            y_max: "y_max".into(),
        }
    }
}

/// A row skipped during table conversion, with the reason.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RejectedRow {
    /// Zero-based row index into the input table.
    pub row: usize,
    pub reason: String,
}

/// Result of converting a pixel-space bounding-box table.
#[derive(Debug, Clone, Default)]
pub struct BboxTableConversion {
    pub annotations: BTreeMap<String, Vec<Annotation>>,
    /// Class labels interned in first-seen order over accepted rows.
    pub class_names: Vec<String>,
    pub rejects: Vec<RejectedRow>,
}

/// Converts corner-form pixel boxes `(x_min, y_min, x_max, y_max)` into
/// normalized annotations grouped by image id.
///
/// Degenerate or invalid rows are rejected with a reason and conversion
/// continues; images with no known dimensions abort with an error listing
/// every orphan id.
pub fn convert_bbox_table(
    rows: &[BTreeMap<String, String>],
    column_map: &ColumnMapping,
    image_dims: &BTreeMap<String, (u32, u32)>,
) -> Result<BboxTableConversion, DatasetError> {
    // Dimension coverage is checked up front so the caller learns about all
    // orphans at once instead of one reject at a time.
    let mut orphans = BTreeSet::new();
    for row in rows {
        if let Some(id) = row.get(&column_map.image_id) {
            if !image_dims.contains_key(id) {
                orphans.insert(id.clone());
            }
        }
    }
    if !orphans.is_empty() {
        return Err(DatasetError::MissingDims(orphans.len(), orphans.into_iter().collect()));
    }

    let mut out = BboxTableConversion::default();
    let mut class_ids: HashMap<String, u32> = HashMap::new();
    for (idx, row) in rows.iter().enumerate() {
        let reject = |reason: String, rejects: &mut Vec<RejectedRow>| {
            rejects.push(RejectedRow { row: idx, reason });
        };
        let Some(image_id) = row.get(&column_map.image_id) else {
            reject(format!("missing column `{}`", column_map.image_id), &mut out.rejects);
            continue;
        };
        let Some(label) = row.get(&column_map.class_label) else {
            reject(format!("missing column `{}`", column_map.class_label), &mut out.rejects);
            continue;
        };
        let mut coords = [0.0f64; 4];
        let names = [&column_map.x_min, &column_map.y_min, &column_map.x_max, &column_map.y_max];
        let mut bad = None;
        for (i, name) in names.iter().enumerate() {
            match row.get(*name).map(|v| v.trim().parse::<f64>()) {
                Some(Ok(v)) if v.is_finite() => coords[i] = v,
                Some(_) => {
                    bad = Some(format!("column `{name}` is not a finite number"));
                    break;
                }
                None => {
                    bad = Some(format!("missing column `{name}`"));
                    break;
                }
            }
        }
        if let Some(reason) = bad {
            reject(reason, &mut out.rejects);
            continue;
        }
        let [x_min, y_min, x_max, y_max] = coords;
        if x_max <= x_min {
            reject(format!("x_max ({x_max}) <= x_min ({x_min})"), &mut out.rejects);
            continue;
        }
        if y_max <= y_min {
            reject(format!("y_max ({y_max}) <= y_min ({y_min})"), &mut out.rejects);
            continue;
        }
        let (w_px, h_px) = image_dims[image_id];
        let (w_px, h_px) = (f64::from(w_px), f64::from(h_px));
        let bbox = match BBox::new(
            (x_min + x_max) / (2.0 * w_px),
            (y_min + y_max) / (2.0 * h_px),
            (x_max - x_min) / w_px,
            (y_max - y_min) / h_px,
        ) {
            Ok(b) => b,
            Err(e) => {
                reject(e.to_string(), &mut out.rejects);
                continue;
            }
        };
        let next_id = class_ids.len() as u32;
        let class_id = *class_ids.entry(label.clone()).or_insert_with(|| {
            out.class_names.push(label.clone());
            next_id
        });
        out.annotations.entry(image_id.clone()).or_default().push(Annotation::new(class_id, bbox));
    }
    Ok(out)
}

/// Reads a headered CSV file into keyed rows for [`convert_bbox_table`].
pub fn read_bbox_csv(path: &Path) -> Result<Vec<BTreeMap<String, String>>, DatasetError> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| match e.kind() {
        csv::ErrorKind::Io(_) => DatasetError::Io {
            path: path.to_path_buf(),
            source: std::io::Error::other(e.to_string()),
        },
        _ => DatasetError::Csv(e),
    })?;
    let headers = reader.headers()?.clone();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let row: BTreeMap<String, String> = headers
            .iter()
            .zip(record.iter())
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Merges manifests into one: class names are unioned in first-seen order
/// (annotation ids remapped), and image-id collisions are resolved by
/// prefixing the record's source name.
pub fn merge_manifests(manifests: &[DatasetManifest]) -> DatasetManifest {
    let mut merged = DatasetManifest::default();
    let mut class_ids: HashMap<String, u32> = HashMap::new();
    let mut image_ids: HashSet<String> = HashSet::new();
    for manifest in manifests {
        let remap: Vec<u32> = manifest
            .class_names
            .iter()
            .map(|name| {
                let next = class_ids.len() as u32;
                *class_ids.entry(name.clone()).or_insert_with(|| {
                    merged.class_names.push(name.clone());
                    next
                })
            })
            .collect();
        for rec in &manifest.records {
            let mut rec = rec.clone();
            for ann in &mut rec.annotations {
                ann.class_id = remap[ann.class_id as usize];
            }
            if image_ids.contains(&rec.image_id) {
                let mut candidate = format!("{}:{}", rec.source, rec.image_id);
                let mut n = 2;
                while image_ids.contains(&candidate) {
                    candidate = format!("{}:{}#{}", rec.source, rec.image_id, n);
                    n += 1;
                }
                rec.image_id = candidate;
            }
            image_ids.insert(rec.image_id.clone());
            merged.records.push(rec);
        }
    }
    merged
}

/// Splits a manifest into train/val by a seeded shuffle.
///
/// `|train| = round(train_fraction * N)` with ties rounding half away from
/// zero. Records keep their original relative order within each side.
pub fn split_manifest(
    manifest: &DatasetManifest,
    train_fraction: f64,
    seed: u64,
) -> Result<(DatasetManifest, DatasetManifest), DatasetError> {
    let n = manifest.records.len();
    if n < 2 {
        return Err(DatasetError::TooFewRecords(n));
    }
    if !(train_fraction.is_finite() && 0.0 < train_fraction && train_fraction < 1.0) {
        return Err(DatasetError::BadFraction(train_fraction));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let n_train = (train_fraction * n as f64).round() as usize;
    let train_set: HashSet<usize> = order[..n_train].iter().copied().collect();
    let mut train = DatasetManifest::new(manifest.class_names.clone());
    train.split = Some(Split::Train);
    let mut val = DatasetManifest::new(manifest.class_names.clone());
    val.split = Some(Split::Val);
    for (idx, rec) in manifest.records.iter().enumerate() {
        if train_set.contains(&idx) {
            train.records.push(rec.clone());
        } else {
            val.records.push(rec.clone());
        }
    }
    Ok((train, val))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IssueKind {
    /// Image file whose header cannot be decoded.
    CorruptImage,
    /// Label file with no image of the same stem.
    OrphanLabel,
    /// Image file with no label file.
    MissingLabel,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntegrityIssue {
    pub kind: IssueKind,
    pub path: PathBuf,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct IntegrityReport {
    pub images_checked: usize,
    pub labels_checked: usize,
    pub issues: Vec<IntegrityIssue>,
}

impl IntegrityReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

const IMAGE_EXTENSIONS: [&str; 5] = ["jpg", "jpeg", "png", "bmp", "webp"];

fn has_image_extension(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| IMAGE_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()))
}

/// Swaps the last path component named `from` with `to`, when present.
fn swap_tree(path: &Path, from: &str, to: &str) -> Option<PathBuf> {
    let components: Vec<_> = path.components().collect();
    let pos = components
        .iter()
        .rposition(|c| c.as_os_str().to_str() == Some(from))?;
    let mut out = PathBuf::new();
    for (i, c) in components.iter().enumerate() {
        if i == pos {
            out.push(to);
        } else {
            out.push(c.as_os_str());
        }
    }
    Some(out)
}

/// Scans a dataset directory for corrupt images, orphan labels, and images
/// missing a label file.
///
/// Labels pair with images either side by side (`x.jpg` + `x.txt`) or across
/// parallel `images/`–`labels/` trees. Image headers are checked without a
/// full decode; files are processed in parallel and the report is sorted, so
/// output is deterministic for fixed directory contents.
pub fn scan_integrity(root: &Path) -> Result<IntegrityReport, DatasetError> {
    if !root.is_dir() {
        return Err(DatasetError::Io {
            path: root.to_path_buf(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory"),
        });
    }
    let mut images = Vec::new();
    let mut labels = Vec::new();
    for entry in walkdir::WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| DatasetError::Io {
            path: root.to_path_buf(),
            source: std::io::Error::other(e.to_string()),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.into_path();
        if has_image_extension(&path) {
            images.push(path);
        } else if path.extension().and_then(|e| e.to_str()) == Some("txt") {
            labels.push(path);
        }
    }
    images.sort();
    labels.sort();
    let label_set: HashSet<&Path> = labels.iter().map(PathBuf::as_path).collect();

    let mut issues: Vec<IntegrityIssue> = images
        .par_iter()
        .flat_map(|path| {
            let mut found = Vec::new();
            match image::ImageReader::open(path)
                .map_err(|e| e.to_string())
                .and_then(|r| r.with_guessed_format().map_err(|e| e.to_string()))
                .and_then(|r| r.into_dimensions().map_err(|e| e.to_string()))
            {
                Ok((w, h)) if w > 0 && h > 0 => {}
                Ok(_) => found.push(IntegrityIssue {
                    kind: IssueKind::CorruptImage,
                    path: path.clone(),
                    detail: "zero-sized image".into(),
                }),
                Err(e) => found.push(IntegrityIssue {
                    kind: IssueKind::CorruptImage,
                    path: path.clone(),
                    detail: format!("unreadable header: {e}"),
                }),
            }
            let sibling = path.with_extension("txt");
            let swapped = swap_tree(&sibling, "images", "labels");
            let has_label = label_set.contains(sibling.as_path())
                || swapped.as_deref().is_some_and(|p| label_set.contains(p));
            if !has_label {
                found.push(IntegrityIssue {
                    kind: IssueKind::MissingLabel,
                    path: path.clone(),
                    detail: "no label file with matching stem".into(),
                });
            }
            found
        })
        .collect();

    let image_stems: HashSet<PathBuf> = images.iter().map(|p| p.with_extension("")).collect();
    for label in &labels {
        let stem = label.with_extension("");
        let swapped = swap_tree(&stem, "labels", "images");
        let has_image = image_stems.contains(&stem)
            || swapped.as_ref().is_some_and(|p| image_stems.contains(p));
        if !has_image {
            issues.push(IntegrityIssue {
                kind: IssueKind::OrphanLabel,
                path: label.clone(),
                detail: "no image with matching stem".into(),
            });
        }
    }
    issues.sort_by(|a, b| (a.kind, &a.path).cmp(&(b.kind, &b.path)));
    Ok(IntegrityReport { images_checked: images.len(), labels_checked: labels.len(), issues })
}

/// Instance counts and marginal coordinate histograms for a manifest.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatasetStats {
    pub image_count: usize,
    pub instance_count: usize,
    /// Instance count per class id, aligned with the manifest class table.
    pub per_class: Vec<u64>,
    /// Fixed 50-bin histograms over [0, 1].
    pub cx_hist: Vec<u64>,
    pub cy_hist: Vec<u64>,
    pub w_hist: Vec<u64>,
    pub h_hist: Vec<u64>,
}

fn bin_index(value: f64) -> usize {
    ((value * HIST_BINS as f64).floor() as usize).min(HIST_BINS - 1)
}

/// Computes instance counts, the per-class histogram, and 50-bin marginal
/// histograms of cx, cy, w, h.
pub fn dataset_stats(manifest: &DatasetManifest) -> DatasetStats {
    let mut stats = DatasetStats {
        image_count: manifest.records.len(),
        instance_count: 0,
        per_class: vec![0; manifest.class_names.len()],
        cx_hist: vec![0; HIST_BINS],
        cy_hist: vec![0; HIST_BINS],
        w_hist: vec![0; HIST_BINS],
        h_hist: vec![0; HIST_BINS],
    };
    for rec in &manifest.records {
        for ann in &rec.annotations {
            stats.instance_count += 1;
            let class = ann.class_id as usize;
            if class >= stats.per_class.len() {
                stats.per_class.resize(class + 1, 0);
            }
            stats.per_class[class] += 1;
            stats.cx_hist[bin_index(ann.bbox.cx)] += 1;
            stats.cy_hist[bin_index(ann.bbox.cy)] += 1;
            stats.w_hist[bin_index(ann.bbox.w)] += 1;
            stats.h_hist[bin_index(ann.bbox.h)] += 1;
        }
    }
    stats
}
