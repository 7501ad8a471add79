//! Boxes, polygons, and intersection-over-union.
//!
//! Geometry is continuous: a box of width `w` has area `w * h` with no
//! pixel-inclusive `+1`, matching the COCO convention.

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("polygon needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("polygon vertex {0} is not finite")]
    NonFiniteVertex(usize),
}

/// Axis-aligned bounding box: `x`/`y` is the top-left corner, y grows down.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox<S> {
    pub x: S,
    pub y: S,
    pub w: S,
    pub h: S,
}

impl<S: Scalar> BBox<S> {
    pub fn new(x: S, y: S, w: S, h: S) -> Self {
        Self { x, y, w, h }
    }

    pub fn area(&self) -> S {
        self.w * self.h
    }

    pub fn right(&self) -> S {
        self.x + self.w
    }

    pub fn bottom(&self) -> S {
        self.y + self.h
    }
}

/// Intersection over union of two boxes; `0` when the union has zero area.
pub fn iou<S: Scalar>(a: &BBox<S>, b: &BBox<S>) -> S {
    let left = a.x.max(b.x);
    let top = a.y.max(b.y);
    let right = a.right().min(b.right());
    let bottom = a.bottom().min(b.bottom());

    let zero = S::zero();
    if right <= left || bottom <= top {
        return zero;
    }
    let inter = (right - left) * (bottom - top);
    let union = a.area() + b.area() - inter;
    if union <= zero {
        return zero;
    }
    inter / union
}

/// Closed polygon given as an ordered vertex list, length >= 3.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<S> {
    points: Vec<(S, S)>,
}

impl<S: Scalar> Polygon<S> {
    pub fn new(points: Vec<(S, S)>) -> Result<Self, GeometryError> {
        if points.len() < 3 {
            return Err(GeometryError::TooFewPoints(points.len()));
        }
        for (i, (x, y)) in points.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(GeometryError::NonFiniteVertex(i));
            }
        }
        Ok(Self { points })
    }

    /// Four-point rectangle from opposite corners, clockwise from top-left.
    pub fn from_corners(x1: S, y1: S, x2: S, y2: S) -> Self {
        Self {
            points: vec![(x1, y1), (x2, y1), (x2, y2), (x1, y2)],
        }
    }

    /// Rectangle from a box (inverse of [`Polygon::bbox`] for rectangles).
    pub fn from_bbox(b: &BBox<S>) -> Self {
        Self::from_corners(b.x, b.y, b.right(), b.bottom())
    }

    pub fn points(&self) -> &[(S, S)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 3 by construction
    }

    /// Tight axis-aligned envelope: (min x, min y, max x - min x, max y - min y).
    pub fn bbox(&self) -> BBox<S> {
        let (x0, y0) = self.points[0];
        let mut min_x = x0;
        let mut min_y = y0;
        let mut max_x = x0;
        let mut max_y = y0;
        for &(x, y) in &self.points[1..] {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        BBox::new(min_x, min_y, max_x - min_x, max_y - min_y)
    }

    /// True for a 4-vertex axis-aligned rectangle (any winding/start corner).
    pub fn is_axis_aligned_rect(&self) -> bool {
        if self.points.len() != 4 {
            return false;
        }
        let b = self.bbox();
        if b.w <= S::zero() || b.h <= S::zero() {
            return false;
        }
        // Each vertex sits on a corner and consecutive vertices share an edge.
        let corner = |x: S, y: S| (x == b.x || x == b.right()) && (y == b.y || y == b.bottom());
        for i in 0..4 {
            let (x, y) = self.points[i];
            if !corner(x, y) {
                return false;
            }
            let (nx, ny) = self.points[(i + 1) % 4];
            if x != nx && y != ny {
                return false;
            }
        }
        // All four corners must be distinct for a proper rectangle.
        let mut seen = Vec::with_capacity(4);
        for &p in &self.points {
            if seen.contains(&p) {
                return false;
            }
            seen.push(p);
        }
        true
    }
}

/// Tight axis-aligned envelope of a polygon.
pub fn bbox_of<S: Scalar>(polygon: &Polygon<S>) -> BBox<S> {
    polygon.bbox()
}
