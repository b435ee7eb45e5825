//! Exact triangle calculus in the plane `x1 + x2 + x3 = 0`.
//!
//! An apex `v` with positive height `h = v1 + v2 + v3` determines the closed
//! equilateral triangle `T(v) = {q in H : q_i <= v_i for all i}` whose
//! corners are
//!
//! ```text
//! p1 = (-v2-v3, v2, v3)    p2 = (v1, -v1-v3, v3)    p3 = (v1, v2, -v1-v2)
//! ```
//!
//! Writing `q = sum(lambda_i * p_i)` with `sum(lambda_i) = 1`, the
//! barycentric coordinates are `lambda_i = (v_i - q_i) / h`, so every
//! containment, region, crossing and arrow predicate below reduces to exact
//! sign tests on coordinate differences. The independent route through the
//! barycentric linear system lives in [`crate::oracle`] and is used by the
//! test suites to cross-check these implementations.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::Result;

/// Index of a triangle corner (and of the arrow relation's type).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerIndex {
    C1 = 1,
    C2 = 2,
    C3 = 3,
}

impl CornerIndex {
    pub const ALL: [CornerIndex; 3] = [CornerIndex::C1, CornerIndex::C2, CornerIndex::C3];

    pub fn from_u8(k: u8) -> Result<Self> {
        match k {
            1 => Ok(CornerIndex::C1),
            2 => Ok(CornerIndex::C2),
            3 => Ok(CornerIndex::C3),
            other => Err(Error::InvalidCornerIndex(other)),
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    fn idx(self) -> usize {
        self as usize - 1
    }

    /// The two indices other than `self`, in increasing order.
    pub fn others(self) -> (CornerIndex, CornerIndex) {
        match self {
            CornerIndex::C1 => (CornerIndex::C2, CornerIndex::C3),
            CornerIndex::C2 => (CornerIndex::C1, CornerIndex::C3),
            CornerIndex::C3 => (CornerIndex::C1, CornerIndex::C2),
        }
    }

    /// Cyclic successor 1 -> 2 -> 3 -> 1.
    pub fn succ(self) -> CornerIndex {
        match self {
            CornerIndex::C1 => CornerIndex::C2,
            CornerIndex::C2 => CornerIndex::C3,
            CornerIndex::C3 => CornerIndex::C1,
        }
    }
}

impl fmt::Display for CornerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// A point of R^3 encoding a (possibly degenerate) triangle in the plane H.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Apex([Rational; 3]);

impl Apex {
    pub fn new(v1: Rational, v2: Rational, v3: Rational) -> Self {
        Apex([v1, v2, v3])
    }

    pub fn from_ints(v1: i64, v2: i64, v3: i64) -> Self {
        Apex([
            crate::rational::rat(v1),
            crate::rational::rat(v2),
            crate::rational::rat(v3),
        ])
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn coord(&self, k: CornerIndex) -> &Rational {
        &self.0[k.idx()]
    }

    /// `v1 + v2 + v3`; the triangle is nonempty with positive area iff
    /// the height is positive, a single point iff it is zero.
    pub fn height(&self) -> Rational {
        &(&self.0[0] + &self.0[1]) + &self.0[2]
    }

    pub fn has_triangle(&self) -> bool {
        self.height().is_positive()
    }

    /// Translate along (1,1,1); changes the height by `3t` but no order
    /// relation between apexes.
    pub fn translate(&self, t: &Rational) -> Apex {
        Apex([&self.0[0] + t, &self.0[1] + t, &self.0[2] + t])
    }

    pub fn corner(&self, k: CornerIndex) -> Corner {
        let mut point = self.0.clone();
        let (i, j) = k.others();
        point[k.idx()] = -(&self.0[i.idx()] + &self.0[j.idx()]);
        Corner {
            index: k,
            point: HPoint(point),
        }
    }

    pub fn corners(&self) -> [Corner; 3] {
        [
            self.corner(CornerIndex::C1),
            self.corner(CornerIndex::C2),
            self.corner(CornerIndex::C3),
        ]
    }

    fn ensure_triangle(&self) -> Result<()> {
        if self.has_triangle() {
            Ok(())
        } else {
            Err(Error::DegenerateApex(
                format_rational(&self.0[0]),
                format_rational(&self.0[1]),
                format_rational(&self.0[2]),
            ))
        }
    }
}

impl fmt::Display for Apex {
    fmt_triple!();
}

/// Shared display logic for rational coordinate triples.
macro_rules! fmt_triple {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(
                f,
                "({}, {}, {})",
                format_rational(&self.0[0]),
                format_rational(&self.0[1]),
                format_rational(&self.0[2])
            )
        }
    };
}
use fmt_triple;

impl Serialize for Apex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.0.iter().map(format_rational).collect();
        strs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Apex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strs = <Vec<String>>::deserialize(deserializer)?;
        if strs.len() != 3 {
            return Err(D::Error::custom(format!(
                "apex needs exactly 3 coordinates, got {}",
                strs.len()
            )));
        }
        let mut coords = Vec::with_capacity(3);
        for s in &strs {
            coords.push(parse_rational(s).map_err(D::Error::custom)?);
        }
        Ok(Apex([
            coords.remove(0),
            coords.remove(0),
            coords.remove(0),
        ]))
    }
}

/// A point lying exactly in the plane H.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HPoint([Rational; 3]);

impl HPoint {
    pub fn new(q1: Rational, q2: Rational, q3: Rational) -> Result<Self> {
        if (&(&q1 + &q2) + &q3).is_zero() {
            Ok(HPoint([q1, q2, q3]))
        } else {
            Err(Error::NotInPlane(
                format_rational(&q1),
                format_rational(&q2),
                format_rational(&q3),
            ))
        }
    }

    pub fn from_ints(q1: i64, q2: i64, q3: i64) -> Result<Self> {
        Self::new(
            crate::rational::rat(q1),
            crate::rational::rat(q2),
            crate::rational::rat(q3),
        )
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn coord(&self, k: CornerIndex) -> &Rational {
        &self.0[k.idx()]
    }
}

impl fmt::Display for HPoint {
    fmt_triple!();
}

/// A triangle corner: which index it is and where it sits in H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub index: CornerIndex,
    pub point: HPoint,
}

/// The seven closed regions determined by an apex: the triangle itself,
/// three corner cones and three side slabs. They overlap on boundary lines,
/// so membership is a set rather than a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RegionId {
    Tri,
    R1,
    R2,
    R3,
    R12,
    R13,
    R23,
}

impl RegionId {
    pub const ALL: [RegionId; 7] = [
        RegionId::Tri,
        RegionId::R1,
        RegionId::R2,
        RegionId::R3,
        RegionId::R12,
        RegionId::R13,
        RegionId::R23,
    ];
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegionId::Tri => "TRI",
            RegionId::R1 => "R1",
            RegionId::R2 => "R2",
            RegionId::R3 => "R3",
            RegionId::R12 => "R12",
            RegionId::R13 => "R13",
            RegionId::R23 => "R23",
        };
        f.write_str(s)
    }
}

/// Certificate that `ordering` is consecutively tail-biting in `type_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailBitingCert {
    pub ordering: Vec<String>,
    #[serde(rename = "type")]
    pub type_k: u8,
}

/// `q` lies in the closed triangle of `v`: `q_i <= v_i` for all i.
pub fn contains_closed(v: &Apex, q: &HPoint) -> bool {
    (0..3).all(|i| q.0[i] <= v.0[i])
}

/// `q` lies in the open (relative interior of the) triangle of `v`.
pub fn contains_open(v: &Apex, q: &HPoint) -> bool {
    (0..3).all(|i| q.0[i] < v.0[i])
}

/// Componentwise minimum. The triangle of the meet is exactly the
/// intersection of the two triangles; the closed intersection is nonempty
/// iff the meet's height is `>= 0`, the open one iff it is `> 0`.
pub fn meet(u: &Apex, v: &Apex) -> Apex {
    Apex([
        u.0[0].clone().min(v.0[0].clone()),
        u.0[1].clone().min(v.0[1].clone()),
        u.0[2].clone().min(v.0[2].clone()),
    ])
}

/// Strict componentwise domination `z_i < x_i`; for positive heights this is
/// equivalent to the closed triangle of `z` lying in the open one of `x`.
pub fn precedes(z: &Apex, x: &Apex) -> bool {
    (0..3).all(|i| z.0[i] < x.0[i])
}

/// Componentwise `<=`; equivalent to triangle containment.
pub fn leq(u: &Apex, v: &Apex) -> bool {
    (0..3).all(|i| u.0[i] <= v.0[i])
}

/// Every region whose closed defining condition holds for `q`.
///
/// Writing `d_i = v_i - q_i` (the barycentric numerators):
/// the triangle requires all `d_i >= 0`; the slab beyond side `ij` requires
/// `d_i, d_j >= 0` and `d_k <= 0`; the cone beyond corner `k` requires
/// `d_i, d_j <= 0`. The seven regions cover H.
pub fn region_memberships(v: &Apex, q: &HPoint) -> Result<BTreeSet<RegionId>> {
    v.ensure_triangle()?;
    let d: Vec<Rational> = (0..3).map(|i| &v.0[i] - &q.0[i]).collect();
    let nonneg = |i: usize| !d[i].is_negative();
    let nonpos = |i: usize| !d[i].is_positive();

    let mut out = BTreeSet::new();
    if nonneg(0) && nonneg(1) && nonneg(2) {
        out.insert(RegionId::Tri);
    }
    // side slabs: R_ij holds when q is beyond line l_ij only
    if nonneg(0) && nonneg(1) && nonpos(2) {
        out.insert(RegionId::R12);
    }
    if nonneg(0) && nonneg(2) && nonpos(1) {
        out.insert(RegionId::R13);
    }
    if nonneg(1) && nonneg(2) && nonpos(0) {
        out.insert(RegionId::R23);
    }
    // corner cones: R_k holds when q is beyond both sides meeting at p_k
    if nonpos(1) && nonpos(2) {
        out.insert(RegionId::R1);
    }
    if nonpos(0) && nonpos(2) {
        out.insert(RegionId::R2);
    }
    if nonpos(0) && nonpos(1) {
        out.insert(RegionId::R3);
    }
    Ok(out)
}

/// Membership of `q` in one particular region of `v`.
pub fn in_region(v: &Apex, q: &HPoint, region: RegionId) -> Result<bool> {
    Ok(region_memberships(v, q)?.contains(&region))
}

/// Two triangles are crossing when their interiors overlap and neither
/// contains the other.
pub fn crossing(u: &Apex, v: &Apex) -> Result<bool> {
    u.ensure_triangle()?;
    v.ensure_triangle()?;
    Ok(meet(u, v).has_triangle() && !leq(u, v) && !leq(v, u))
}

/// The type-k arrow: `u` and `v` cross and corner `k` of `v` lies in the
/// closed triangle of `u`.
pub fn arrow(u: &Apex, v: &Apex, k: CornerIndex) -> Result<bool> {
    Ok(crossing(u, v)? && contains_closed(u, &v.corner(k).point))
}

/// A sequence is consecutively tail-biting in type k when every earlier
/// member arrows every later one. All pairs are checked; transitivity needs
/// a crossing hypothesis and so cannot be used as a shortcut.
pub fn is_tail_biting(seq: &[Apex], k: CornerIndex) -> Result<bool> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort(seq.len()));
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if !arrow(&seq[i], &seq[j], k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A side of a triangle, named by the two corners it joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub i: CornerIndex,
    pub j: CornerIndex,
}

impl Side {
    pub const ALL: [Side; 3] = [
        Side {
            i: CornerIndex::C1,
            j: CornerIndex::C2,
        },
        Side {
            i: CornerIndex::C1,
            j: CornerIndex::C3,
        },
        Side {
            i: CornerIndex::C2,
            j: CornerIndex::C3,
        },
    ];

    /// The corner index not on this side; also the tail-biting type used
    /// when attaching a clique across this side.
    pub fn opposite(&self) -> CornerIndex {
        match (self.i, self.j) {
            (CornerIndex::C1, CornerIndex::C2) => CornerIndex::C3,
            (CornerIndex::C1, CornerIndex::C3) => CornerIndex::C2,
            (CornerIndex::C2, CornerIndex::C3) => CornerIndex::C1,
            _ => unreachable!("sides are stored with i < j"),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Point on the side line of `w` at parameter `t`: `t = 0` is corner `i`,
/// `t = 1` is corner `j`, values outside `[0,1]` extend the line.
pub fn side_point(w: &Apex, side: Side, t: &Rational) -> HPoint {
    let h = w.height();
    let step = t * &h;
    let mut coords = w.corner(side.i).point.0.clone();
    coords[side.i.idx()] += &step;
    coords[side.j.idx()] -= &step;
    HPoint(coords)
}

/// The parameter interval of the side line of `w` that lies inside the
/// closed triangle of `u`, or `None` when the line misses it.
///
/// Along side (i,j) of `w`, the moving point is `p_i + t*h*(e_i - e_j)`, so
/// each containment constraint is linear in `t`; the constant coordinate `k`
/// must satisfy `w_k <= u_k` outright.
pub fn side_interval(w: &Apex, side: Side, u: &Apex) -> Option<(Rational, Rational)> {
    let k = side.opposite();
    if w.coord(k) > u.coord(k) {
        return None;
    }
    let h = w.height();
    debug_assert!(h.is_positive());
    // coordinate i: -w_j - w_k + t*h <= u_i
    let hi = (u.coord(side.i) + w.coord(side.j) + w.coord(k)) / &h;
    // coordinate j: w_j - t*h <= u_j
    let lo = (w.coord(side.j) - u.coord(side.j)) / &h;
    if lo <= hi {
        Some((lo, hi))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn apex(a: i64, b: i64, c: i64) -> Apex {
        Apex::from_ints(a, b, c)
    }

    fn hpoint(a: i64, b: i64, c: i64) -> HPoint {
        HPoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn corner_formulas() {
        let v = apex(1, 1, 1);
        let ps: Vec<_> = v.corners().into_iter().map(|c| c.point).collect();
        assert_eq!(ps[0], hpoint(-2, 1, 1));
        assert_eq!(ps[1], hpoint(1, -2, 1));
        assert_eq!(ps[2], hpoint(1, 1, -2));

        let v = apex(2, 0, 1);
        let ps: Vec<_> = v.corners().into_iter().map(|c| c.point).collect();
        assert_eq!(ps[0], hpoint(-1, 0, 1));
        assert_eq!(ps[1], hpoint(2, -3, 1));
        assert_eq!(ps[2], hpoint(2, 0, -2));
    }

    #[test]
    fn corners_of_zero_apex_collapse() {
        let v = apex(0, 0, 0);
        for c in v.corners() {
            assert_eq!(c.point, hpoint(0, 0, 0));
        }
        assert!(!v.has_triangle());
    }

    #[test]
    fn corners_lie_in_plane() {
        let v = Apex::new(ratio(7, 2), rat(-1), rat(5));
        for c in v.corners() {
            let s: Rational = c.point.coords().iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn containment_closed_vs_open() {
        let v = apex(1, 1, 1);
        assert!(contains_closed(&v, &hpoint(0, 0, 0)));
        assert!(contains_open(&v, &hpoint(0, 0, 0)));
        // a corner is on the boundary
        assert!(contains_closed(&v, &hpoint(1, 1, -2)));
        assert!(!contains_open(&v, &hpoint(1, 1, -2)));
        assert!(!contains_closed(&v, &hpoint(2, -1, -1)));
        assert!(!contains_open(&v, &hpoint(2, -1, -1)));
    }

    #[test]
    fn hpoint_rejects_off_plane() {
        assert!(HPoint::from_ints(1, 1, 1).is_err());
    }

    #[test]
    fn region_memberships_examples() {
        let v = apex(1, 1, 1);
        let only = |q: &HPoint| region_memberships(&v, q).unwrap();

        let interior: BTreeSet<_> = [RegionId::Tri].into();
        assert_eq!(only(&hpoint(0, 0, 0)), interior);

        // a corner belongs to the triangle, both adjacent slabs and its cone
        let at_p3: BTreeSet<_> =
            [RegionId::Tri, RegionId::R13, RegionId::R23, RegionId::R3].into();
        assert_eq!(only(&hpoint(1, 1, -2)), at_p3);

        let far: BTreeSet<_> = [RegionId::R2].into();
        assert_eq!(only(&hpoint(5, -10, 5)), far);
    }

    #[test]
    fn region_memberships_reject_degenerate() {
        assert!(region_memberships(&apex(0, 0, 0), &hpoint(0, 0, 0)).is_err());
    }

    #[test]
    fn regions_cover_the_plane() {
        let v = apex(2, -1, 3);
        for a in -6..=6 {
            for b in -6..=6 {
                let q = hpoint(a, b, -a - b);
                assert!(
                    !region_memberships(&v, &q).unwrap().is_empty(),
                    "no region for {q}"
                );
            }
        }
    }

    #[test]
    fn meet_examples() {
        let m = meet(&apex(1, 0, 0), &apex(0, 1, 0));
        assert_eq!(m, apex(0, 0, 0));
        assert!(m.height().is_zero());

        assert_eq!(meet(&apex(1, 1, 1), &apex(1, 1, 1)), apex(1, 1, 1));

        let m = meet(&apex(3, 3, 3), &apex(2, 3, 4));
        assert_eq!(m, apex(2, 3, 3));
        assert_eq!(m.height(), rat(8));
        // witness point inside both open triangles
        let q = hpoint(0, 0, 0);
        assert!(contains_open(&apex(3, 3, 3), &q) && contains_open(&apex(2, 3, 4), &q));
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&apex(0, 0, 0), &apex(1, 1, 1)));
        assert!(!precedes(&apex(1, 1, 1), &apex(1, 2, 2)));
        let z = apex(0, 0, 1);
        let x = apex(2, 2, 2);
        assert!(precedes(&z, &x));
        for c in z.corners() {
            assert!(contains_open(&x, &c.point));
        }
    }

    #[test]
    fn crossing_examples() {
        assert!(crossing(&apex(3, 3, 3), &apex(2, 3, 4)).unwrap());
        // nested triangles do not cross
        assert!(!crossing(&apex(1, 1, 1), &apex(2, 2, 2)).unwrap());
        // touching in a single point is not an open intersection
        assert!(!crossing(&apex(3, 0, 0), &apex(0, 3, 0)).unwrap());
        assert!(crossing(&apex(0, 0, 0), &apex(1, 1, 1)).is_err());
    }

    #[test]
    fn arrow_examples() {
        let u = apex(3, 3, 3);
        let v = apex(2, 3, 4);
        assert!(arrow(&u, &v, CornerIndex::C3).unwrap());
        assert!(!arrow(&u, &v, CornerIndex::C1).unwrap());
        assert!(!arrow(&apex(1, 1, 1), &apex(2, 2, 2), CornerIndex::C3).unwrap());
    }

    #[test]
    fn tail_biting_examples() {
        let seq = [
            apex(1, 1, 1),
            Apex::new(ratio(1, 4), rat(1), ratio(7, 4)),
            Apex::new(ratio(-1, 2), rat(1), ratio(5, 2)),
        ];
        assert!(is_tail_biting(&seq, CornerIndex::C3).unwrap());

        let mut rev = seq.to_vec();
        rev.reverse();
        assert!(!is_tail_biting(&rev, CornerIndex::C3).unwrap());

        let nested = [apex(1, 1, 1), apex(2, 2, 2)];
        for k in CornerIndex::ALL {
            assert!(!is_tail_biting(&nested, k).unwrap());
        }

        assert!(is_tail_biting(&seq[..1], CornerIndex::C3).is_err());
    }

    #[test]
    fn side_points_and_intervals() {
        let w = apex(1, 1, 1);
        let s12 = Side::ALL[0];
        assert_eq!(side_point(&w, s12, &rat(0)), hpoint(-2, 1, 1));
        assert_eq!(side_point(&w, s12, &rat(1)), hpoint(1, -2, 1));

        // the triangle covers its own side exactly
        let (lo, hi) = side_interval(&w, s12, &w).unwrap();
        assert_eq!((lo, hi), (rat(0), rat(1)));

        // a triangle below the side line misses it
        assert!(side_interval(&w, s12, &apex(1, 1, 0)).is_none());
    }

    #[test]
    fn apex_serde_round_trip() {
        let v = Apex::new(ratio(1, 2), rat(-3), rat(7));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1/2","-3","7"]"#);
        let back: Apex = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
