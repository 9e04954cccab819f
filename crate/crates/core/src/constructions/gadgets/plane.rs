//! Exact planar vector arithmetic for placing gadget corners.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::geometry::{Point3, Q, SpatialGraph};

pub(super) type P2 = (Q, Q);

pub(super) fn q(i: i64) -> Q {
    BigRational::from_integer(BigInt::from(i))
}

pub(super) fn frac(a: i64, b: i64) -> Q {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub(super) fn flat(p: &Point3) -> P2 {
    (p[0].clone(), p[1].clone())
}

pub(super) fn lift(p: &P2, z: Q) -> Point3 {
    [p.0.clone(), p.1.clone(), z]
}

pub(super) fn lerp(a: &Point3, b: &Point3, t: &Q) -> Point3 {
    [
        &a[0] + t * (&b[0] - &a[0]),
        &a[1] + t * (&b[1] - &a[1]),
        &a[2] + t * (&b[2] - &a[2]),
    ]
}

pub(super) fn add(a: &P2, b: &P2) -> P2 {
    (&a.0 + &b.0, &a.1 + &b.1)
}

pub(super) fn sub(a: &P2, b: &P2) -> P2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

pub(super) fn scale(a: &P2, t: &Q) -> P2 {
    (&a.0 * t, &a.1 * t)
}

pub(super) fn dot(a: &P2, b: &P2) -> Q {
    &a.0 * &b.0 + &a.1 * &b.1
}

pub(super) fn cross(a: &P2, b: &P2) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn orient(a: &P2, b: &P2, c: &P2) -> i8 {
    let v = cross(&sub(b, a), &sub(c, a));
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Whether the closed segments `ab` and `cd` share a point.
pub(super) fn segments_meet(a: &P2, b: &P2, c: &P2, d: &P2) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    let within = |p: &P2, q: &P2, r: &P2| {
        r.0 >= p.0.clone().min(q.0.clone())
            && r.0 <= p.0.clone().max(q.0.clone())
            && r.1 >= p.1.clone().min(q.1.clone())
            && r.1 <= p.1.clone().max(q.1.clone())
    };
    (o1 == 0 && within(a, b, c))
        || (o2 == 0 && within(a, b, d))
        || (o3 == 0 && within(c, d, a))
        || (o4 == 0 && within(c, d, b))
}

/// Every vertex and corner of `g`.
pub(super) fn all_points(g: &SpatialGraph) -> Vec<Point3> {
    let mut out: Vec<Point3> = (1..=g.n()).map(|v| g.vertex(v).clone()).collect();
    for e in g.edges().collect::<Vec<_>>() {
        out.extend(g.corners(e).iter().cloned());
    }
    out
}

pub(super) fn max_height(g: &SpatialGraph) -> Q {
    all_points(g)
        .into_iter()
        .map(|p| p[2].clone())
        .max()
        .expect("nonempty graph")
}

/// The rational with the smallest denominator strictly between `a < b`.
pub(super) fn simplest_between(a: &Q, b: &Q) -> Q {
    let f = a.floor();
    let next = &f + Q::one();
    if &next < b {
        return next;
    }
    if *a == f {
        // (f, b) with b <= f + 1: the answer is f + 1/m for the least m > 1/(b - f)
        let m = (Q::one() / (b - &f)).floor() + Q::one();
        return f + Q::one() / m;
    }
    f.clone() + Q::one() / simplest_between(&(Q::one() / (b - &f)), &(Q::one() / (a - &f)))
}
