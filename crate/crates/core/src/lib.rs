//! Exact-rational toolkit for counting zeros of polynomials of the form
//! q(x,y,z)^2 - p(x,y) on Cartesian grids, with the hyperelliptic, circle
//! geometry and additive-combinatorics instances built on top of it.

pub mod arithapps;
pub mod circlegeom;
pub mod eszcount;
pub mod exactq;
pub mod hyperell;
