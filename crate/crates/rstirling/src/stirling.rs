//! Stirling numbers of both kinds, r-Stirling numbers of the first kind,
//! and the harmonic / hyperharmonic number family.
//!
//! The r-Stirling numbers of the first kind `[n, k]_r` are defined here
//! purely by their recurrence: the base row is `[r, k]_r = 1` when
//! `k = r` (0 otherwise) and, for `n > r`,
//!
//! ```text
//! [n, k]_r = (n-1) * [n-1, k]_r + [n-1, k-1]_r
//! ```
//!
//! with value 0 whenever `n < r`, `k < r` or `k > n`. The `r = 0` table
//! is the ordinary unsigned Stirling numbers of the first kind, and the
//! `r = 1` table coincides with it for `n >= 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::exact::{
    binomial, factorial, int, rising_factorial_int, to_rational, Integer, Rational,
};

/// Memoized triangle of first-kind r-Stirling numbers.
///
/// Rows are cached whole, keyed by `(r, n)`, and filled upward from the
/// base row `n = r`. The cache is behaviourally transparent: clearing it
/// never changes a returned value, and concurrent readers racing to fill
/// a row observe exactly the sequentially recomputed numbers.
pub struct RStirlingTable {
    rows: Mutex<HashMap<(usize, usize), Arc<Vec<Integer>>>>,
}

impl Default for RStirlingTable {
    fn default() -> Self {
        Self::new()
    }
}

impl RStirlingTable {
    pub fn new() -> Self {
        RStirlingTable {
            rows: Mutex::new(HashMap::new()),
        }
    }

    /// `[n, k]_r`.
    pub fn get(&self, n: usize, k: usize, r: usize) -> Integer {
        if n < r || k < r || k > n {
            return Integer::zero();
        }
        let row = self.row(n, r);
        row[k - r].clone()
    }

    /// The row for `n` at shift `r`, as values for `k = r..=n`.
    /// Requires `n >= r`.
    pub fn row(&self, n: usize, r: usize) -> Arc<Vec<Integer>> {
        assert!(n >= r, "row requires n >= r");
        let mut rows = self.rows.lock().unwrap();
        if let Some(row) = rows.get(&(r, n)) {
            return Arc::clone(row);
        }
        // Find the highest cached row at or below n and extend from it.
        let mut base = n;
        let mut current = loop {
            if let Some(row) = rows.get(&(r, base)) {
                break Arc::clone(row);
            }
            if base == r {
                let row = Arc::new(vec![Integer::one()]);
                rows.insert((r, r), Arc::clone(&row));
                break row;
            }
            base -= 1;
        };
        for m in base + 1..=n {
            let prev = &current;
            let width = m - r + 1;
            let mut next = Vec::with_capacity(width);
            let factor = int(m as i64 - 1);
            for idx in 0..width {
                // idx corresponds to k = r + idx
                let mut v = Integer::zero();
                if idx < prev.len() {
                    v += &factor * &prev[idx];
                }
                if idx >= 1 {
                    v += &prev[idx - 1];
                }
                next.push(v);
            }
            current = Arc::new(next);
            rows.insert((r, m), Arc::clone(&current));
        }
        current
    }

    /// Drops every cached row.
    pub fn clear(&self) {
        self.rows.lock().unwrap().clear();
    }

    /// Number of cached rows (diagnostic).
    pub fn cached_rows(&self) -> usize {
        self.rows.lock().unwrap().len()
    }
}

fn global_table() -> &'static RStirlingTable {
    static TABLE: OnceLock<RStirlingTable> = OnceLock::new();
    TABLE.get_or_init(RStirlingTable::new)
}

/// `[n, k]_r`, served from a process-wide memoized table.
pub fn r_stirling1(n: usize, k: usize, r: usize) -> Integer {
    global_table().get(n, k, r)
}

/// Unsigned Stirling number of the first kind `[n, k]`.
pub fn stirling1(n: usize, k: usize) -> Integer {
    r_stirling1(n, k, 0)
}

fn stirling2_rows() -> &'static Mutex<Vec<Arc<Vec<Integer>>>> {
    static ROWS: OnceLock<Mutex<Vec<Arc<Vec<Integer>>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![Arc::new(vec![Integer::one()])]))
}

/// Stirling number of the second kind `{n, k}`, memoized row by row via
/// `{n, k} = k * {n-1, k} + {n-1, k-1}`.
pub fn stirling2(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let mut rows = stirling2_rows().lock().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let prev = Arc::clone(&rows[m - 1]);
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut v = Integer::zero();
            if j < prev.len() {
                v += int(j as i64) * &prev[j];
            }
            if j >= 1 {
                v += &prev[j - 1];
            }
            next.push(v);
        }
        rows.push(Arc::new(next));
    }
    rows[n][k].clone()
}

/// `[m+n+1, i+n+1]_{n+1}` computed by the expansion
/// `sum_{j=i}^{m} C(m, j) * [j, i] * rf(n+1, m-j)`,
/// an independent route to the same number the recurrence table yields.
///
/// Panics if `i > m`.
pub fn r_stirling1_via_broder(m: usize, i: usize, n: usize) -> Integer {
    assert!(i <= m, "r_stirling1_via_broder requires i <= m");
    let mut acc = Integer::zero();
    for j in i..=m {
        acc += binomial(m as i64, j as i64)
            * stirling1(j, i)
            * rising_factorial_int(n as i64 + 1, m - j);
    }
    acc
}

/// Parameters of the shifted generalized harmonic sum
/// `H(j, k; r) = sum_{t=1..j} 1 / (t + r)^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HarmonicSpec {
    /// Upper summation limit (the sum is empty when 0).
    pub j: usize,
    /// Power of the reciprocals; must be >= 1.
    pub k: usize,
    /// Index shift.
    pub r: usize,
}

/// Exact value of `H(j, k; r)`. `H(j, 1; 0)` is the ordinary harmonic
/// number and `H(j, k; 0)` the generalized one.
pub fn harmonic(spec: &HarmonicSpec) -> Rational {
    assert!(spec.k >= 1, "harmonic requires k >= 1");
    let mut acc = Rational::zero();
    for t in 1..=spec.j {
        let mut denom = Integer::one();
        let base = int((t + spec.r) as i64);
        for _ in 0..spec.k {
            denom *= &base;
        }
        acc += Rational::new(Integer::one(), denom);
    }
    acc
}

/// The harmonic number H_j.
pub fn harmonic_number(j: usize) -> Rational {
    harmonic(&HarmonicSpec { j, k: 1, r: 0 })
}

/// The generalized harmonic number H_j^[k].
pub fn generalized_harmonic(j: usize, k: usize) -> Rational {
    harmonic(&HarmonicSpec { j, k, r: 0 })
}

/// Hyperharmonic number H_n^(r): the r-fold iterated partial sum of the
/// reciprocals. H_n^(0) = 1/n, H_n^(1) = H_n, and for r >= 1 the value
/// is computed through the closed form `[n+r, r+1]_r / n!`.
pub fn hyperharmonic(n: usize, r: usize) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    if r == 0 {
        return Rational::new(Integer::one(), int(n as i64));
    }
    Rational::new(r_stirling1(n + r, r + 1, r), factorial(n))
}

/// Hyperharmonic number by the defining recursion
/// `H_n^(r) = sum_{i=1..n} H_i^(r-1)`; retained as the independent
/// oracle for [`hyperharmonic`].
pub fn hyperharmonic_recursive(n: usize, r: usize) -> Rational {
    let mut row: Vec<Rational> = (0..=n)
        .map(|i| {
            if i == 0 {
                Rational::zero()
            } else {
                Rational::new(Integer::one(), int(i as i64))
            }
        })
        .collect();
    for _ in 0..r {
        let mut acc = Rational::zero();
        for v in row.iter_mut().skip(1) {
            acc += &*v;
            *v = acc.clone();
        }
    }
    row[n].clone()
}

/// Triangle families exportable as tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleFamily {
    Stirling1,
    Stirling2,
    RStirling1,
}

impl TriangleFamily {
    pub fn name(&self) -> &'static str {
        match self {
            TriangleFamily::Stirling1 => "stirling1",
            TriangleFamily::Stirling2 => "stirling2",
            TriangleFamily::RStirling1 => "r-stirling1",
        }
    }

    pub fn parse(s: &str) -> Option<TriangleFamily> {
        match s {
            "stirling1" => Some(TriangleFamily::Stirling1),
            "stirling2" => Some(TriangleFamily::Stirling2),
            "r-stirling1" => Some(TriangleFamily::RStirling1),
            _ => None,
        }
    }
}

/// Rows of a triangle: one row per n, columns k = r..=n (r = 0 for the
/// ordinary Stirling triangles). Empty when `nmax < r`.
pub fn triangle_rows(family: TriangleFamily, r: usize, nmax: usize) -> Vec<Vec<Integer>> {
    let low = match family {
        TriangleFamily::RStirling1 => r,
        _ => 0,
    };
    if nmax < low {
        return Vec::new();
    }
    (low..=nmax)
        .map(|n| {
            (low..=n)
                .map(|k| match family {
                    TriangleFamily::Stirling1 => stirling1(n, k),
                    TriangleFamily::Stirling2 => stirling2(n, k),
                    TriangleFamily::RStirling1 => r_stirling1(n, k, r),
                })
                .collect()
        })
        .collect()
}

/// Delimited text export of a triangle, with a header line recording the
/// family and shift. `sep` is typically ',' (CSV) or '\t' (TSV).
pub fn triangle_delimited(family: TriangleFamily, r: usize, nmax: usize, sep: char) -> String {
    let low = match family {
        TriangleFamily::RStirling1 => r,
        _ => 0,
    };
    let mut out = format!(
        "# family={} r={} rows n={}..={} columns k={}..=n\n",
        family.name(),
        r,
        low,
        nmax,
        low
    );
    for row in triangle_rows(family, r, nmax) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(&sep.to_string()));
        out.push('\n');
    }
    out
}

/// JSON export of a triangle: rows of canonical integer strings plus the
/// header fields.
pub fn triangle_json(family: TriangleFamily, r: usize, nmax: usize) -> serde_json::Value {
    let rows: Vec<Vec<String>> = triangle_rows(family, r, nmax)
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.to_string()).collect())
        .collect();
    serde_json::json!({
        "family": family.name(),
        "r": r,
        "nmax": nmax,
        "rows": rows,
    })
}

/// Convenience: `[n, k]_r` as a rational.
pub fn r_stirling1_rat(n: usize, k: usize, r: usize) -> Rational {
    to_rational(&r_stirling1(n, k, r))
}

/// Convenience: `[n, k]` as a rational.
pub fn stirling1_rat(n: usize, k: usize) -> Rational {
    to_rational(&stirling1(n, k))
}

/// Convenience: `{n, k}` as a rational.
pub fn stirling2_rat(n: usize, k: usize) -> Rational {
    to_rational(&stirling2(n, k))
}

/// Convenience: `C(n, k)` as a rational.
pub fn binomial_rat(n: i64, k: i64) -> Rational {
    to_rational(&binomial(n, k))
}

/// Convenience: `n!` as a rational.
pub fn factorial_rat(n: usize) -> Rational {
    to_rational(&factorial(n))
}

/// Convenience: 1/q as a rational for q != 0.
pub fn reciprocal(q: i64) -> Rational {
    Rational::new(Integer::one(), int(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    /// Plain row-by-row oracle for [n, k]_r, independent of the table.
    fn r_stirling1_oracle(n: usize, k: usize, r: usize) -> Integer {
        if n < r || k < r || k > n {
            return Integer::zero();
        }
        let mut row = vec![Integer::one()]; // n = r, entry k = r
        for m in r + 1..=n {
            let mut next = vec![Integer::zero(); m - r + 1];
            for (idx, v) in next.iter_mut().enumerate() {
                if idx < row.len() {
                    *v += int(m as i64 - 1) * &row[idx];
                }
                if idx >= 1 {
                    *v += &row[idx - 1];
                }
            }
            row = next;
        }
        row[k - r].clone()
    }

    fn stirling2_oracle(n: usize, k: usize) -> Integer {
        if n == 0 && k == 0 {
            return Integer::one();
        }
        if k == 0 || k > n {
            return Integer::zero();
        }
        int(k as i64) * stirling2_oracle(n - 1, k) + stirling2_oracle(n - 1, k - 1)
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1(0, 0), int(1));
        assert_eq!(stirling1(4, 2), int(11));
        for n in 0..=12 {
            assert_eq!(stirling1(n, n), int(1));
        }
        assert_eq!(stirling1(3, 5), int(0));
        assert_eq!(stirling1(5, 0), int(0));
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(4, 2), int(7));
        for n in 1..=10 {
            assert_eq!(stirling2(n, 1), int(1));
        }
        assert_eq!(stirling2(3, 5), int(0));
        for n in 0..=9 {
            for k in 0..=9 {
                assert_eq!(stirling2(n, k), stirling2_oracle(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn r_stirling_examples_and_oracle() {
        assert_eq!(r_stirling1(2, 2, 2), int(1));
        assert_eq!(r_stirling1(4, 3, 2), int(5));
        assert_eq!(r_stirling1(4, 2, 2), int(6));
        for r in 0..=4 {
            for n in 0..=9 {
                for k in 0..=9 {
                    assert_eq!(
                        r_stirling1(n, k, r),
                        r_stirling1_oracle(n, k, r),
                        "n={n} k={k} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn r_zero_and_one_reduce_to_ordinary_stirling() {
        for n in 0..=10 {
            for k in 0..=10 {
                assert_eq!(r_stirling1(n, k, 0), stirling1(n, k));
                if n >= 1 {
                    assert_eq!(r_stirling1(n, k, 1), stirling1(n, k));
                }
            }
        }
    }

    #[test]
    fn broder_route_matches_recurrence() {
        assert_eq!(r_stirling1_via_broder(2, 0, 1), int(6));
        assert_eq!(r_stirling1_via_broder(2, 1, 1), int(5));
        for m in 0..=8 {
            assert_eq!(r_stirling1_via_broder(m, m, 3), int(1));
            for i in 0..=m {
                for n in 0..=5 {
                    assert_eq!(
                        r_stirling1_via_broder(m, i, n),
                        r_stirling1(m + n + 1, i + n + 1, n + 1),
                        "m={m} i={i} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "i <= m")]
    fn broder_route_rejects_inverted_indices() {
        r_stirling1_via_broder(2, 3, 0);
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(&HarmonicSpec { j: 0, k: 1, r: 0 }), Rational::zero());
        assert_eq!(harmonic(&HarmonicSpec { j: 3, k: 1, r: 0 }), rat(11, 6));
        assert_eq!(harmonic(&HarmonicSpec { j: 2, k: 2, r: 1 }), rat(13, 36));
        assert_eq!(harmonic_number(3), rat(11, 6));
        assert_eq!(generalized_harmonic(2, 2), rat(5, 4));
    }

    #[test]
    fn hyperharmonic_examples() {
        assert_eq!(hyperharmonic(0, 3), Rational::zero());
        assert_eq!(hyperharmonic(3, 1), rat(11, 6));
        assert_eq!(hyperharmonic(3, 2), rat(13, 3));
        assert_eq!(hyperharmonic_recursive(3, 2), rat(13, 3));
    }

    #[test]
    fn hyperharmonic_closed_form_matches_recursion_and_conway_guy() {
        for n in 0..=10 {
            for r in 0..=5 {
                let v = hyperharmonic(n, r);
                assert_eq!(v, hyperharmonic_recursive(n, r), "n={n} r={r}");
                if n >= 1 && r >= 1 {
                    let cg = to_rational(&binomial((n + r - 1) as i64, (r - 1) as i64))
                        * (harmonic_number(n + r - 1) - harmonic_number(r - 1));
                    assert_eq!(v, cg, "n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn harmonic_number_from_stirling_row() {
        // H_j = (1/j!) * sum_{i=1..j} i * [j, i]
        for j in 1..=10usize {
            let mut acc = Rational::zero();
            for i in 1..=j {
                acc += rat_int(i as i64) * to_rational(&stirling1(j, i));
            }
            acc /= to_rational(&factorial(j));
            assert_eq!(acc, harmonic_number(j));
        }
    }

    #[test]
    fn first_kind_row_sum_identity() {
        // [m+1, i+1] = sum_t t! C(m, t) [m-t, i]
        for m in 0..=9usize {
            for i in 0..=m {
                let mut acc = Integer::zero();
                for t in 0..=m - i {
                    acc += factorial(t) * binomial(m as i64, t as i64) * stirling1(m - t, i);
                }
                assert_eq!(acc, stirling1(m + 1, i + 1), "m={m} i={i}");
            }
        }
    }

    #[test]
    fn alternating_row_sum_is_factorial() {
        // sum_i (-1)^i [m+2, i+2]_2 = m!
        for m in 0..=10usize {
            let mut acc = Integer::zero();
            for i in 0..=m {
                let term = r_stirling1(m + 2, i + 2, 2);
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            assert_eq!(acc, factorial(m), "m={m}");
        }
    }

    #[test]
    fn cache_transparency() {
        let table = RStirlingTable::new();
        let before: Vec<Integer> = (0..=8).map(|k| table.get(8, k, 2)).collect();
        assert!(table.cached_rows() > 0);
        table.clear();
        assert_eq!(table.cached_rows(), 0);
        let after: Vec<Integer> = (0..=8).map(|k| table.get(8, k, 2)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn concurrent_fill_is_consistent() {
        let table = std::sync::Arc::new(RStirlingTable::new());
        let mut handles = Vec::new();
        for _ in 0..4 {
            let t = std::sync::Arc::clone(&table);
            handles.push(std::thread::spawn(move || {
                (0..=30).map(|k| t.get(30, k, 3)).collect::<Vec<_>>()
            }));
        }
        let results: Vec<Vec<Integer>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for w in results.windows(2) {
            assert_eq!(w[0], w[1]);
        }
        for (k, v) in results[0].iter().enumerate() {
            assert_eq!(*v, r_stirling1_oracle(30, k, 3));
        }
    }

    #[test]
    fn triangle_export() {
        let rows = triangle_rows(TriangleFamily::RStirling1, 2, 4);
        assert_eq!(
            rows,
            vec![
                vec![int(1)],
                vec![int(2), int(1)],
                vec![int(6), int(5), int(1)],
            ]
        );
        assert_eq!(
            triangle_rows(TriangleFamily::Stirling1, 0, 0),
            vec![vec![int(1)]]
        );
        assert!(triangle_rows(TriangleFamily::RStirling1, 5, 3).is_empty());
        let csv = triangle_delimited(TriangleFamily::RStirling1, 2, 4, ',');
        assert!(csv.starts_with("# family=r-stirling1 r=2"));
        assert!(csv.contains("6,5,1\n"));
        let json = triangle_json(TriangleFamily::RStirling1, 2, 4);
        assert_eq!(json["rows"][2][0], "6");
    }

}
