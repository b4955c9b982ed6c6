use serde::Serialize;

use super::Interval;

/// A product of closed intervals.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct IBox(pub Vec<Interval>);

impl IBox {
    pub fn new(sides: Vec<Interval>) -> Self {
        assert!(!sides.is_empty(), "a box needs at least one side");
        IBox(sides)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.0.iter().map(Interval::mid).collect()
    }

    /// Largest side width.
    pub fn width(&self) -> f64 {
        self.0.iter().map(Interval::width).fold(0.0, f64::max)
    }

    /// Index of the widest side after dividing each width by `scale[i]`.
    pub fn widest_scaled(&self, scale: &[f64]) -> usize {
        let mut best = 0;
        let mut best_w = f64::NEG_INFINITY;
        for (i, side) in self.0.iter().enumerate() {
            let w = side.width() / scale.get(i).copied().unwrap_or(1.0);
            if w > best_w {
                best = i;
                best_w = w;
            }
        }
        best
    }

    pub fn split_at_axis(&self, axis: usize) -> (IBox, IBox) {
        let (a, b) = self.0[axis].bisect();
        let mut left = self.0.clone();
        let mut right = self.0.clone();
        left[axis] = a;
        right[axis] = b;
        (IBox(left), IBox(right))
    }

    /// Bisects along the widest side; the halves cover the box exactly.
    pub fn bisect(&self) -> (IBox, IBox) {
        self.split_at_axis(self.widest_scaled(&[]))
    }

    pub fn contains_point(&self, x: &[f64]) -> bool {
        self.0.iter().zip(x).all(|(s, &v)| s.contains(v))
    }

    pub fn is_subset(&self, other: &IBox) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a.is_subset(b))
    }

    pub fn volume(&self) -> f64 {
        self.0.iter().map(|s| s.hi() - s.lo()).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn widest_axis_split() {
        let b = IBox::new(vec![iv(0.0, 1.0), iv(0.0, 2.0)]);
        assert_eq!(b.width(), 2.0);
        let (l, r) = b.bisect();
        assert_eq!(l, IBox::new(vec![iv(0.0, 1.0), iv(0.0, 1.0)]));
        assert_eq!(r, IBox::new(vec![iv(0.0, 1.0), iv(1.0, 2.0)]));
        assert_eq!(IBox::new(vec![iv(0.0, 1.0)]).midpoint(), vec![0.5]);
    }

    #[test]
    fn scaled_axis_choice() {
        let b = IBox::new(vec![iv(0.0, 1.0), iv(0.0, 2.0)]);
        assert_eq!(b.widest_scaled(&[0.5, 8.0]), 0);
    }
}
