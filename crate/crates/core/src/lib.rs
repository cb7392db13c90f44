//! Star points, scales and First Families of regular polygons.
//!
//! A regular N-gon in standard position (apothem 1, centered at the origin,
//! bottom edge horizontal) determines `<N/2>` star points `(-tan(k*pi/N), -1)`
//! on its extended base edge, one per nested star polygon `{N, k}`. The ratios
//! `scale[k] = tan(pi/N) / tan(k*pi/N)` are the canonical scales of the N-gon
//! and live in the maximal real subfield of the cyclotomic field `Q(zeta_N)`.
//!
//! This crate computes those constants exactly (arbitrary-precision rational
//! coordinates over cyclotomic power bases), constructs the First Family of
//! tiles for any N, simulates the outer-billiards map and the Digital Filter
//! sawtooth map to generate singularity webs, and verifies the scaling,
//! independence and unit laws the constants obey.
//!
//! The crate is `no_std` (with `alloc`); IO, rendering and the CLI live in the
//! companion `polyfam` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod dynamics;
pub mod error;
pub mod family;
pub mod field;
pub mod geom;
pub mod poly;
pub mod rat;
pub mod stargeom;

pub use error::Error;

/// `<N/2>`: the greatest integer strictly less than `n/2`; the number of
/// distinct star points (and star polygons) of a regular `n`-gon.
pub fn half_n(n: u32) -> u32 {
    if n % 2 == 0 {
        n / 2 - 1
    } else {
        n / 2
    }
}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> alloc::vec::Vec<u32> {
    let mut out = alloc::vec::Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_n_matches_definition() {
        assert_eq!(half_n(7), 3);
        assert_eq!(half_n(14), 6);
        assert_eq!(half_n(4), 1);
        assert_eq!(half_n(24), 11);
    }

    #[test]
    fn phi_small_values() {
        let phis: alloc::vec::Vec<u32> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
