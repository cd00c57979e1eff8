use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[a, b]` with `a < b`.
///
/// Chebyshev machinery works on the reference interval `[-1, 1]`; the affine
/// maps below carry points between the two.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    a: f64,
    b: f64,
}

impl Domain {
    pub const UNIT: Domain = Domain { a: -1.0, b: 1.0 };

    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidDomain { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn is_unit(&self) -> bool {
        self.a == -1.0 && self.b == 1.0
    }

    /// Maps `s ∈ [-1, 1]` onto the domain.
    ///
    /// The endpoints map exactly to `a` and `b`.
    pub fn from_unit(&self, s: f64) -> f64 {
        if self.is_unit() {
            return s;
        }
        if s == -1.0 {
            return self.a;
        }
        if s == 1.0 {
            return self.b;
        }
        0.5 * (self.a + self.b) + 0.5 * (self.b - self.a) * s
    }

    /// Maps `x` in the domain onto `[-1, 1]`. Points outside map outside.
    pub fn to_unit(&self, x: f64) -> f64 {
        if self.is_unit() {
            return x;
        }
        (2.0 * x - self.a - self.b) / (self.b - self.a)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.a && x <= self.b
    }
}

impl Default for Domain {
    fn default() -> Self {
        Self::UNIT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    ChebFirst,
    ChebSecond,
    Legendre,
    Uniform,
    Custom,
}

impl NodeKind {
    pub fn label(&self) -> &'static str {
        match self {
            NodeKind::ChebFirst => "cheb_first",
            NodeKind::ChebSecond => "cheb_second",
            NodeKind::Legendre => "legendre",
            NodeKind::Uniform => "uniform",
            NodeKind::Custom => "custom",
        }
    }
}

/// A sorted set of sample abscissae together with the family it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeSet {
    kind: NodeKind,
    points: Vec<f64>,
    domain: Domain,
}

impl NodeSet {
    /// Validates ordering and containment.
    pub fn new(kind: NodeKind, points: Vec<f64>, domain: Domain) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("node set must not be empty".into()));
        }
        for (i, &p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite(i));
            }
            if !domain.contains(p) {
                return Err(Error::InvalidArgument(format!(
                    "point {p} outside [{}, {}]",
                    domain.a(),
                    domain.b()
                )));
            }
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "node points must be strictly increasing".into(),
            ));
        }
        Ok(Self { kind, points, domain })
    }

    pub(crate) fn from_sorted_unchecked(kind: NodeKind, points: Vec<f64>, domain: Domain) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Self { kind, points, domain }
    }

    /// `count` equispaced points including both endpoints.
    pub fn uniform(count: usize, domain: Domain) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidArgument("uniform grid needs at least 2 points".into()));
        }
        let h = domain.length() / (count - 1) as f64;
        let mut points: Vec<f64> = (0..count).map(|j| domain.a() + j as f64 * h).collect();
        points[count - 1] = domain.b();
        Ok(Self::from_sorted_unchecked(NodeKind::Uniform, points, domain))
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<f64> {
        self.points
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_domain() {
        assert!(Domain::new(1.0, 1.0).is_err());
        assert!(Domain::new(2.0, 1.0).is_err());
        assert!(Domain::new(f64::NAN, 1.0).is_err());
        assert!(Domain::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn affine_maps_hit_endpoints_exactly() {
        let d = Domain::new(0.0, 3.0 * std::f64::consts::PI).unwrap();
        assert_eq!(d.from_unit(-1.0), 0.0);
        assert_eq!(d.from_unit(1.0), 3.0 * std::f64::consts::PI);
        assert!((d.to_unit(d.from_unit(0.3)) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn node_set_checks_order() {
        let d = Domain::UNIT;
        assert!(NodeSet::new(NodeKind::Custom, vec![0.0, 0.0], d).is_err());
        assert!(NodeSet::new(NodeKind::Custom, vec![0.5, 0.0], d).is_err());
        assert!(NodeSet::new(NodeKind::Custom, vec![0.0, 2.0], d).is_err());
        assert!(NodeSet::new(NodeKind::Custom, vec![-1.0, 1.0], d).is_ok());
    }

    #[test]
    fn uniform_grid_endpoints() {
        let g = NodeSet::uniform(5, Domain::new(-2.0, 2.0).unwrap()).unwrap();
        assert_eq!(g.points(), &[-2.0, -1.0, 0.0, 1.0, 2.0]);
    }
}
