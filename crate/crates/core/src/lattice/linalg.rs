//! Small dense linear algebra for lattice bases.

/// Determinant by partial-pivot LU.
pub(crate) fn det_f64(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))
            .unwrap();
        if a[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    det
}

/// Exact integer determinant (Bareiss fraction-free elimination).
pub(crate) fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Adjugate of an integer matrix, `adj(G) G = det(G) I`.
pub(crate) fn adjugate_i128(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = s * det_i128(&minor);
        }
    }
    adj
}

/// Upper-triangular `R` with `G = R^T R` for a positive definite `G`.
pub(crate) fn cholesky_upper(g: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = g.len();
    let mut r = vec![vec![0.0; n]; n];
    for i in 0..n {
        let mut d = g[i][i];
        for k in 0..i {
            d -= r[k][i] * r[k][i];
        }
        assert!(d > 0.0, "Gram matrix is not positive definite");
        r[i][i] = d.sqrt();
        for j in i + 1..n {
            let mut s = g[i][j];
            for k in 0..i {
                s -= r[k][i] * r[k][j];
            }
            r[i][j] = s / r[i][i];
        }
    }
    r
}

pub(crate) fn gram_i128(b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    b.iter()
        .map(|u| {
            b.iter()
                .map(|v| u.iter().zip(v).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

/// Row-style Hermite normal form; returns the nonzero rows, which form a
/// basis of the lattice generated by the input rows.
pub(crate) fn hermite_rows(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for c in 0..ncols {
        loop {
            // smallest nonzero entry in this column at or below the pivot row
            let Some(p) = (pivot_row..a.len())
                .filter(|&r| a[r][c] != 0)
                .min_by_key(|&r| a[r][c].abs())
            else {
                break;
            };
            a.swap(pivot_row, p);
            let mut done = true;
            for r in pivot_row + 1..a.len() {
                if a[r][c] != 0 {
                    let q = a[r][c].div_euclid(a[pivot_row][c]);
                    let (top, rest) = a.split_at_mut(r);
                    for (x, y) in rest[0].iter_mut().zip(&top[pivot_row]) {
                        *x -= q * y;
                    }
                    if a[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < a.len() && a[pivot_row][c] != 0 {
            if a[pivot_row][c] < 0 {
                for x in a[pivot_row].iter_mut() {
                    *x = -*x;
                }
            }
            let pv = a[pivot_row][c];
            for r in 0..pivot_row {
                let q = a[r][c].div_euclid(pv);
                if q != 0 {
                    let (top, rest) = a.split_at_mut(pivot_row);
                    for (x, y) in top[r].iter_mut().zip(&rest[0]) {
                        *x -= q * y;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    a.truncate(pivot_row);
    a
}

/// LLL reduction (`δ = 0.99`) of integer basis rows.
pub(crate) fn lll_reduce(basis: &mut [Vec<i128>]) {
    const DELTA: f64 = 0.99;
    let n = basis.len();
    if n < 2 {
        return;
    }
    let gram_schmidt = |b: &[Vec<i128>]| -> (Vec<Vec<f64>>, Vec<f64>) {
        let mut mu = vec![vec![0.0; n]; n];
        let mut bstar: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut norms = vec![0.0; n];
        for i in 0..n {
            let mut v: Vec<f64> = b[i].iter().map(|&x| x as f64).collect();
            for j in 0..i {
                let m = b[i].iter().zip(&bstar[j]).map(|(&x, y)| x as f64 * y).sum::<f64>() / norms[j];
                mu[i][j] = m;
                for (vk, bk) in v.iter_mut().zip(&bstar[j]) {
                    *vk -= m * bk;
                }
            }
            norms[i] = v.iter().map(|x| x * x).sum();
            bstar.push(v);
        }
        (mu, norms)
    };
    let (mut mu, mut norms) = gram_schmidt(basis);
    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        assert!(guard < 1_000_000, "LLL failed to terminate");
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if q != 0.0 {
                let qi = q as i128;
                let (top, rest) = basis.split_at_mut(k);
                for (x, y) in rest[0].iter_mut().zip(&top[j]) {
                    *x -= qi * y;
                }
                for l in 0..=j {
                    let mjl = if l == j { 1.0 } else { mu[j][l] };
                    mu[k][l] -= q * mjl;
                }
            }
        }
        if norms[k] >= (DELTA - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            let (m, nr) = gram_schmidt(basis);
            mu = m;
            norms = nr;
            k = (k - 1).max(1);
        }
    }
}
