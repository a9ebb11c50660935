//! Lattice geometry of supports: convex hulls, Newton polygons, roofs, cones.

use crate::error::{violation, Error, Result};
use crate::poly::{Direction, Rational};
use crate::weyl::WeylElement;

pub type Point = (i64, i64);

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn det(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

/// A convex lattice polygon, counterclockwise from its lexicographically
/// smallest vertex. Points and segments are allowed (1 or 2 vertices).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LatticePolygon {
    vertices: Vec<Point>,
}

impl LatticePolygon {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed boundary edges; a segment yields both orientations.
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|k| (self.vertices[k], self.vertices[(k + 1) % n]))
            .collect()
    }

    /// Closed containment, exact.
    pub fn contains(&self, pt: Point) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == pt,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, pt) == 0
                    && pt.0 >= a.0.min(b.0)
                    && pt.0 <= a.0.max(b.0)
                    && pt.1 >= a.1.min(b.1)
                    && pt.1 <= a.1.max(b.1)
            }
            _ => self.edges().iter().all(|&(a, b)| cross(a, b, pt) >= 0),
        }
    }
}

/// Andrew's monotone chain, dropping collinear points.
pub fn convex_hull(points: &[Point]) -> Result<LatticePolygon> {
    if points.is_empty() {
        return Err(Error::InvalidParameter(
            "convex hull of an empty set".into(),
        ));
    }
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return Ok(LatticePolygon { vertices: pts });
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all points collinear: the chains collapse to the two endpoints twice
    if lower.len() == 2
        || (lower.len() > 2 && lower.windows(3).all(|w| cross(w[0], w[1], w[2]) == 0))
    {
        lower.sort_unstable();
        lower.dedup();
        let vertices = vec![lower[0], *lower.last().unwrap()];
        return Ok(LatticePolygon { vertices });
    }
    Ok(LatticePolygon { vertices: lower })
}

pub fn support_points(z: &WeylElement) -> Vec<Point> {
    z.terms().map(|(&(i, j), _)| (i as i64, j as i64)).collect()
}

/// Slides each point down along `(-1,-1)` to the axes and adds the origin
/// when the diagonal crosses the set.
fn sweep_down(points: &[Point]) -> Result<LatticePolygon> {
    let mut all = points.to_vec();
    for &(x, y) in points {
        let m = x.min(y);
        all.push((x - m, y - m));
    }
    let a = points.iter().map(|&(x, y)| y - x).min().unwrap();
    let b = points.iter().map(|&(x, y)| y - x).max().unwrap();
    if a <= 0 && 0 <= b {
        all.push((0, 0));
    }
    let poly = convex_hull(&all)?;
    if poly.vertices.iter().any(|&(x, y)| x < 0 || y < 0) {
        return Err(violation("Newton polygon left the first quadrant"));
    }
    Ok(poly)
}

/// The solid Newton polygon: points of the quadrant that reach
/// `Convex(E(z))` by moving along `(1,1)`.
pub fn ntp(z: &WeylElement) -> LatticePolygon {
    if z.is_zero() {
        return LatticePolygon::empty();
    }
    let hull = convex_hull(&support_points(z)).expect("nonempty support");
    sweep_down(hull.vertices()).expect("lattice input stays in the quadrant")
}

/// Rebuilds `NTP(z)` from the roof alone.
pub fn ntp_from_roof(roof: &RoofChain) -> Result<LatticePolygon> {
    sweep_down(&roof.points)
}

/// The concave chain of hull edges facing directions with `rho + sigma > 0`,
/// from the `(1,-1)` end to the `(-1,1)` end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoofChain {
    pub points: Vec<Point>,
}

impl RoofChain {
    pub fn is_point(&self) -> bool {
        self.points.len() == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    /// Outward normals of the edges, in chain order.
    pub fn normals(&self) -> Vec<Direction> {
        self.edges().map(|(a, b)| outward_normal(a, b)).collect()
    }
}

fn outward_normal(a: Point, b: Point) -> Direction {
    Direction::new(b.1 - a.1, a.0 - b.0).expect("distinct hull vertices")
}

pub fn roof(z: &WeylElement) -> Result<RoofChain> {
    if z.is_zero() {
        return Err(Error::ZeroInput);
    }
    let hull = convex_hull(&support_points(z))?;
    let v = hull.vertices();
    let n = v.len();
    let up: Vec<bool> = hull
        .edges()
        .iter()
        .map(|&(a, b)| outward_normal(a, b).weight_sum() > 0)
        .collect();
    let Some(start) = (0..up.len()).find(|&k| up[k] && !up[(k + up.len() - 1) % up.len()]) else {
        let top = *v.iter().max_by_key(|&&(x, y)| x + y).unwrap();
        return Ok(RoofChain { points: vec![top] });
    };
    let mut points = vec![v[start]];
    let mut k = start;
    while up[k] {
        k = (k + 1) % n;
        points.push(v[k]);
    }
    Ok(RoofChain { points })
}

/// Directions whose leading forms cover every roof vertex and edge:
/// vertex representative, edge normal, vertex representative, ...
pub fn fan_directions(z: &WeylElement) -> Result<Vec<Direction>> {
    let chain = roof(z)?;
    let mut bounds = vec![Direction::new(1, -1).unwrap()];
    bounds.extend(chain.normals());
    bounds.push(Direction::new(-1, 1).unwrap());
    Ok(interleave(&bounds))
}

/// The common refinement of the fans of several nonzero elements: every
/// combination of leading forms is realized by one returned direction.
pub fn common_fan_directions(elems: &[&WeylElement]) -> Result<Vec<Direction>> {
    let mut normals: Vec<Direction> = Vec::new();
    for z in elems {
        normals.extend(roof(z)?.normals());
    }
    let as_point = |d: &Direction| (d.rho(), d.sigma());
    // inside the half-plane rho + sigma > 0 the angular order is the cross-product order
    normals.sort_by(|a, b| 0.cmp(&det(as_point(a), as_point(b))));
    normals.dedup();
    let mut bounds = vec![Direction::new(1, -1).unwrap()];
    bounds.extend(normals);
    bounds.push(Direction::new(-1, 1).unwrap());
    Ok(interleave(&bounds))
}

fn interleave(bounds: &[Direction]) -> Vec<Direction> {
    let mut out = Vec::new();
    for k in 0..bounds.len() - 1 {
        let (a, b) = (bounds[k], bounds[k + 1]);
        let rep = Direction::new(a.rho() + b.rho(), a.sigma() + b.sigma())
            .unwrap_or_else(|_| Direction::new(1, 1).unwrap());
        out.push(rep);
        if k + 1 < bounds.len() - 1 {
            out.push(b);
        }
    }
    out
}

/// The point of the path `(1,t)` for `-1 < t <= 1`, `(2-t,1)` for
/// `1 <= t < 3`, as a primitive direction.
pub fn path_direction(t: &Rational) -> Result<Direction> {
    let (a, b) = (
        i64::try_from(t.numer()).map_err(|_| Error::Resource("t too large".into()))?,
        i64::try_from(t.denom()).map_err(|_| Error::Resource("t too large".into()))?,
    );
    if a <= -b || a >= 3 * b {
        return Err(Error::InvalidParameter(format!(
            "t = {a}/{b} outside (-1,3)"
        )));
    }
    if a <= b {
        Direction::new(b, a)
    } else {
        Direction::new(2 * b - a, b)
    }
}

/// `{t v : t >= 0, v in S}` for `S` in the closed first quadrant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeSector {
    OriginOnly,
    Ray(Point),
    /// Counterclockwise from the first ray to the second.
    Sector(Point, Point),
}

fn primitive(p: Point) -> Point {
    let g = num_integer::gcd(p.0, p.1);
    (p.0 / g, p.1 / g)
}

impl ConeSector {
    pub fn contains(&self, pt: Point) -> bool {
        if pt == (0, 0) {
            return true;
        }
        match *self {
            ConeSector::OriginOnly => false,
            ConeSector::Ray(r) => det(r, pt) == 0 && r.0 * pt.0 + r.1 * pt.1 > 0,
            ConeSector::Sector(lo, hi) => det(lo, pt) >= 0 && det(pt, hi) >= 0,
        }
    }

    pub fn rays(&self) -> Vec<Point> {
        match *self {
            ConeSector::OriginOnly => Vec::new(),
            ConeSector::Ray(r) => vec![r],
            ConeSector::Sector(lo, hi) => vec![lo, hi],
        }
    }
}

pub fn cone_of(points: &[Point]) -> Result<ConeSector> {
    if points.is_empty() {
        return Err(Error::InvalidParameter("cone of an empty set".into()));
    }
    if points.iter().any(|&(x, y)| x < 0 || y < 0) {
        return Err(Error::InvalidParameter(
            "cone input outside the first quadrant".into(),
        ));
    }
    let rays: Vec<Point> = points
        .iter()
        .filter(|&&p| p != (0, 0))
        .map(|&p| primitive(p))
        .collect();
    let Some(&first) = rays.first() else {
        return Ok(ConeSector::OriginOnly);
    };
    let lo = rays
        .iter()
        .copied()
        .fold(first, |m, r| if det(m, r) < 0 { r } else { m });
    let hi = rays
        .iter()
        .copied()
        .fold(first, |m, r| if det(m, r) > 0 { r } else { m });
    Ok(if lo == hi {
        ConeSector::Ray(lo)
    } else {
        ConeSector::Sector(lo, hi)
    })
}

/// `V+ = {y >= x}` or `V- = {x >= y}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    Plus,
    Minus,
}

impl HalfPlane {
    pub fn contains(self, (x, y): Point) -> bool {
        match self {
            HalfPlane::Plus => y >= x,
            HalfPlane::Minus => x >= y,
        }
    }
}

/// The five equivalent descriptions of `z in D>=0` (or `D<=0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradingGeometry {
    pub graded: bool,
    pub support: bool,
    pub roof: bool,
    pub cone: bool,
    pub ntp: bool,
}

impl GradingGeometry {
    pub fn as_array(&self) -> [bool; 5] {
        [self.graded, self.support, self.roof, self.cone, self.ntp]
    }

    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

pub fn grading_geometry_equiv(z: &WeylElement, side: HalfPlane) -> Result<GradingGeometry> {
    if z.is_zero() {
        return Err(Error::ZeroInput);
    }
    let chain = roof(z)?;
    let all_in = |pts: &[Point]| pts.iter().all(|&p| side.contains(p));
    let g = GradingGeometry {
        graded: match side {
            HalfPlane::Plus => z.in_d_geq(0),
            HalfPlane::Minus => z.in_d_leq(0),
        },
        support: all_in(&support_points(z)),
        roof: all_in(&chain.points),
        cone: all_in(&cone_of(&chain.points)?.rays()),
        ntp: all_in(ntp(z).vertices()),
    };
    if !g.agree() {
        return Err(violation(format!(
            "grading/geometry disagreement for {z}: {g:?}"
        )));
    }
    Ok(g)
}

/// A roof vertex `(i,i)` with `i >= 1`, if any.
pub fn diagonal_vertex(z: &WeylElement) -> Result<Option<Point>> {
    Ok(roof(z)?.points.into_iter().find(|&(x, y)| x == y && x >= 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn pq(i: u32, j: u32) -> WeylElement {
        WeylElement::monomial(rat(1), i, j)
    }

    fn pentagon() -> WeylElement {
        pq(1, 0) + pq(2, 3) + pq(3, 1) + pq(4, 2) + pq(5, 0)
    }

    #[test]
    fn hull_examples() {
        assert_eq!(convex_hull(&[(0, 0)]).unwrap().vertices(), &[(0, 0)]);
        assert_eq!(
            convex_hull(&[(0, 0), (2, 0), (1, 0)]).unwrap().vertices(),
            &[(0, 0), (2, 0)]
        );
        assert_eq!(
            convex_hull(&[(1, 0), (2, 3), (3, 1), (4, 2), (5, 0)])
                .unwrap()
                .vertices(),
            &[(1, 0), (5, 0), (4, 2), (2, 3)]
        );
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn ntp_examples() {
        assert_eq!(
            ntp(&pentagon()).vertices(),
            &[(0, 0), (5, 0), (4, 2), (2, 3), (0, 1)]
        );
        assert_eq!(ntp(&pq(3, 0)).vertices(), &[(3, 0)]);
        assert!(ntp(&WeylElement::zero()).is_empty());
    }

    #[test]
    fn roof_examples() {
        assert_eq!(
            roof(&pentagon()).unwrap().points,
            vec![(5, 0), (4, 2), (2, 3)]
        );
        assert_eq!(roof(&pq(2, 3)).unwrap().points, vec![(2, 3)]);
        assert_eq!(
            roof(&(pq(1, 0) + pq(0, 1))).unwrap().points,
            vec![(1, 0), (0, 1)]
        );
        assert_eq!(roof(&(pq(0, 0) + pq(2, 2))).unwrap().points, vec![(2, 2)]);
        assert_eq!(roof(&WeylElement::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn ntp_from_roof_matches() {
        let z = pentagon();
        assert_eq!(ntp_from_roof(&roof(&z).unwrap()).unwrap(), ntp(&z));
    }

    #[test]
    fn cone_examples() {
        assert_eq!(cone_of(&[(2, 2)]).unwrap(), ConeSector::Ray((1, 1)));
        assert_eq!(
            cone_of(&[(1, 0), (0, 1)]).unwrap(),
            ConeSector::Sector((1, 0), (0, 1))
        );
        assert_eq!(cone_of(&[(0, 0)]).unwrap(), ConeSector::OriginOnly);
        let c = cone_of(&[(0, 0), (4, 2), (1, 3)]).unwrap();
        assert!(c.contains((1, 1)) && !c.contains((1, 0)) && !c.contains((0, 1)));
    }

    #[test]
    fn grading_examples() {
        let z = pq(0, 1) + pq(1, 2);
        assert_eq!(
            grading_geometry_equiv(&z, HalfPlane::Plus)
                .unwrap()
                .as_array(),
            [true; 5]
        );
        assert_eq!(
            grading_geometry_equiv(&pq(1, 0), HalfPlane::Plus)
                .unwrap()
                .as_array(),
            [false; 5]
        );
        assert_eq!(
            grading_geometry_equiv(&pq(1, 1), HalfPlane::Plus)
                .unwrap()
                .as_array(),
            [true; 5]
        );
        assert_eq!(
            grading_geometry_equiv(&pq(1, 1), HalfPlane::Minus)
                .unwrap()
                .as_array(),
            [true; 5]
        );
    }

    #[test]
    fn fan_of_pentagon() {
        let dirs: Vec<(i64, i64)> = fan_directions(&pentagon())
            .unwrap()
            .iter()
            .map(|d| (d.rho(), d.sigma()))
            .collect();
        assert_eq!(dirs, vec![(1, 0), (2, 1), (1, 1), (1, 2), (0, 1)]);
        let dirs = fan_directions(&pq(2, 2)).unwrap();
        assert_eq!(dirs, vec![Direction::new(1, 1).unwrap()]);
    }

    #[test]
    fn common_fan_refines_both() {
        let z = pq(1, 0) + pq(0, 1);
        let w = pq(0, 1) + pq(3, 0);
        let dirs = common_fan_directions(&[&z, &w]).unwrap();
        assert!(dirs.contains(&Direction::new(1, 1).unwrap()));
        assert!(dirs.contains(&Direction::new(1, 3).unwrap()));
        assert_eq!(dirs.len(), 5);
    }

    #[test]
    fn path_endpoints() {
        assert_eq!(
            path_direction(&rat(0)).unwrap(),
            Direction::new(1, 0).unwrap()
        );
        assert_eq!(
            path_direction(&rat(2)).unwrap(),
            Direction::new(0, 1).unwrap()
        );
        assert_eq!(
            path_direction(&ratio(5, 2)).unwrap(),
            Direction::new(-1, 2).unwrap()
        );
        assert!(path_direction(&rat(3)).is_err());
    }

    #[test]
    fn diagonal_vertices() {
        assert_eq!(
            diagonal_vertex(&(pq(1, 1) + pq(2, 0))).unwrap(),
            Some((1, 1))
        );
        assert_eq!(
            diagonal_vertex(&(pq(2, 2) + pq(0, 0))).unwrap(),
            Some((2, 2))
        );
        assert_eq!(diagonal_vertex(&(pq(1, 0) + pq(0, 1))).unwrap(), None);
    }
}
