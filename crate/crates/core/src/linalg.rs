//! Small exact linear algebra over the integers (dimension at most 4).

/// Determinant of the leading `n × n` block, by fraction-free elimination.
pub(crate) fn det(m: &[[i128; 4]; 4], n: usize) -> i128 {
    let mut a = *m;
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
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

/// Coordinates of `v` over the columns `basis[0..n]`, as `(numerators, det)`.
///
/// Cramer's rule; `det` is never zero for the bases used here.
pub(crate) fn solve(basis: &[[i64; 4]], v: &[i64; 4], n: usize) -> ([i128; 4], i128) {
    let mut m = [[0i128; 4]; 4];
    for (j, col) in basis.iter().enumerate().take(n) {
        for i in 0..n {
            m[i][j] = col[i] as i128;
        }
    }
    let d = det(&m, n);
    let mut out = [0i128; 4];
    for (j, slot) in out.iter_mut().enumerate().take(n) {
        let mut mj = m;
        for i in 0..n {
            mj[i][j] = v[i] as i128;
        }
        *slot = det(&mj, n);
    }
    (out, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let mut m = [[0i128; 4]; 4];
        m[0] = [0, 2, 1, 0];
        m[1] = [1, 0, 3, 0];
        m[2] = [4, 1, 0, 0];
        // Expand along the first row by hand: −2·(0−12) + 1·(1−0) = 25.
        assert_eq!(det(&m, 3), 25);
        let mut id = [[0i128; 4]; 4];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = 1;
        }
        assert_eq!(det(&id, 4), 1);
    }

    #[test]
    fn cramer() {
        let basis = [[2, 0, 0, 0], [1, 1, 0, 0], [0, 0, 3, 0]];
        let (num, d) = solve(&basis, &[5, 1, 6, 0], 3);
        let x: [i128; 3] = [num[0], num[1], num[2]];
        assert_eq!(x.map(|c| c * 6 / d), [12, 6, 12]);
    }
}
