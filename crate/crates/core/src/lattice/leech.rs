//! Extended binary Golay code and an integral basis of the Leech lattice.
//!
//! Coordinates are scaled by `sqrt 8`, so lattice vectors are integer
//! vectors and inner products are multiples of 8.

use super::linalg::{gram_i128, hermite_rows, lll_reduce};

/// Generator polynomial `x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1` of the
/// cyclic binary Golay code of length 23.
const GOLAY_POLY: [u8; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];

/// Basis of the extended Golay code: 12 words of length 24.
pub(crate) fn golay_basis() -> Vec<[u8; 24]> {
    (0..12)
        .map(|shift| {
            let mut w = [0u8; 24];
            for (k, &c) in GOLAY_POLY.iter().enumerate() {
                w[shift + k] = c;
            }
            let parity = w[..23].iter().fold(0, |a, b| a ^ b);
            w[23] = parity;
            w
        })
        .collect()
}

/// All 4096 codewords.
#[cfg(test)]
pub(crate) fn golay_codewords() -> Vec<[u8; 24]> {
    let basis = golay_basis();
    (0u32..4096)
        .map(|mask| {
            let mut w = [0u8; 24];
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for k in 0..24 {
                        w[k] ^= b[k];
                    }
                }
            }
            w
        })
        .collect()
}

/// LLL-reduced basis of the Leech lattice in `sqrt 8`-scaled coordinates.
pub(crate) fn leech_basis_scaled() -> Vec<Vec<i128>> {
    let mut gens: Vec<Vec<i128>> = Vec::new();
    for c in golay_basis() {
        gens.push(c.iter().map(|&b| 2 * b as i128).collect());
    }
    for i in 1..24 {
        let mut v = vec![0i128; 24];
        v[0] = 4;
        v[i] = 4;
        gens.push(v);
    }
    let mut v = vec![0i128; 24];
    v[0] = 8;
    gens.push(v);
    let mut v = vec![1i128; 24];
    v[0] = -3;
    gens.push(v);
    let mut basis = hermite_rows(&gens);
    lll_reduce(&mut basis);
    basis
}

/// Integer Gram matrix `B B^T / 8` of the reduced Leech basis.
pub(crate) fn leech_gram() -> Vec<Vec<i64>> {
    gram_i128(&leech_basis_scaled())
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| {
                    assert_eq!(v % 8, 0);
                    (v / 8) as i64
                })
                .collect()
        })
        .collect()
}
