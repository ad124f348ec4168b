//! Schur polynomials in a chosen subset of loop variables.
//!
//! [`schur_polynomial`] expands the Schur polynomial of a partition as a
//! [`ZPoly`] via the Jacobi-Trudi determinant in complete homogeneous
//! polynomials; a partition with more parts than variables gives zero. The
//! unit tests check the expansion against a direct tableau enumeration.

use super::{Partition, ZPoly};

/// The complete homogeneous polynomial `h_k` in the variables `vars`
/// (indices into a ring of the given arity). `h_0 = 1` and `h_k = 0` for
/// `k < 0` is handled by callers; this takes `k >= 0`.
pub fn complete_homogeneous(k: u32, vars: &[usize], arity: usize) -> ZPoly {
    // Row j of the table holds h_j in the first (so far processed)
    // variables: h_j(x_1..x_s) = h_j(x_1..x_{s-1}) + x_s h_{j-1}(x_1..x_s).
    let mut table: Vec<ZPoly> = Vec::with_capacity(k as usize + 1);
    table.push(ZPoly::one(arity));
    table.resize(k as usize + 1, ZPoly::zero(arity));
    for &v in vars {
        assert!(v < arity, "complete_homogeneous: variable index out of range");
        for j in 1..=k as usize {
            let bump = table[j - 1].mul_var_pow(v, 1);
            table[j] = &table[j] + &bump;
        }
    }
    table.pop().expect("complete_homogeneous: table is nonempty")
}

/// The elementary polynomial `e_k` in the variables `vars`.
pub fn elementary_polynomial(k: u32, vars: &[usize], arity: usize) -> ZPoly {
    if k as usize > vars.len() {
        return ZPoly::zero(arity);
    }
    let mut table: Vec<ZPoly> = vec![ZPoly::one(arity)];
    for _ in 1..=k {
        table.push(ZPoly::zero(arity));
    }
    // e_j(x_1..x_s) = e_j(x_1..x_{s-1}) + x_s e_{j-1}(x_1..x_{s-1}):
    // process j downwards so the right-hand side still refers to s-1 vars.
    for &v in vars {
        assert!(v < arity, "elementary_polynomial: variable index out of range");
        for j in (1..=k as usize).rev() {
            let bump = table[j - 1].mul_var_pow(v, 1);
            table[j] = &table[j] + &bump;
        }
    }
    table.pop().expect("elementary_polynomial: table is nonempty")
}

/// The Schur polynomial `s_lambda` in the variables `vars`, expanded as a
/// Laurent polynomial (with nonnegative exponents). Zero when the partition
/// has more parts than there are variables.
pub fn schur_polynomial(lambda: &Partition, vars: &[usize], arity: usize) -> ZPoly {
    if lambda.len() > vars.len() {
        return ZPoly::zero(arity);
    }
    let t = lambda.len();
    if t == 0 {
        return ZPoly::one(arity);
    }
    // Jacobi-Trudi: det( h_{lambda_k - k + l} ), 1 <= k, l <= t.
    let max_index = lambda.part(0) as i64 + t as i64;
    let h: Vec<ZPoly> =
        (0..=max_index).map(|j| complete_homogeneous(j as u32, vars, arity)).collect();
    let entry = |k: usize, l: usize| -> ZPoly {
        let idx = lambda.part(k) as i64 - (k as i64 + 1) + (l as i64 + 1);
        if idx < 0 {
            ZPoly::zero(arity)
        } else {
            h[idx as usize].clone()
        }
    };
    det_by_permutations(t, entry, arity)
}

/// Determinant by signed permutation expansion; adequate for the small
/// matrices arising from partitions with few parts.
fn det_by_permutations(
    t: usize,
    entry: impl Fn(usize, usize) -> ZPoly,
    arity: usize,
) -> ZPoly {
    let mut total = ZPoly::zero(arity);
    let mut perm: Vec<usize> = (0..t).collect();
    loop {
        let mut sign = 0usize;
        for a in 0..t {
            for b in a + 1..t {
                if perm[a] > perm[b] {
                    sign += 1;
                }
            }
        }
        let mut prod = ZPoly::one(arity);
        for (k, &l) in perm.iter().enumerate() {
            prod = &prod * &entry(k, l);
            if prod.is_zero() {
                break;
            }
        }
        if sign % 2 == 1 {
            prod = -prod;
        }
        total = &total + &prod;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsymbolic::RatQ;

    /// Sum of `x^{content}` over semistandard tableaux of shape `lambda`
    /// with entries in `1..=m`: a definition of the Schur polynomial
    /// independent of the determinant route.
    fn schur_by_tableaux(lambda: &Partition, vars: &[usize], arity: usize) -> ZPoly {
        let rows = lambda.len();
        if rows == 0 {
            return ZPoly::one(arity);
        }
        // Fill row by row, cell by cell; entry at (r, c) must be >= entry at
        // (r, c-1) and > entry at (r-1, c). Entries are indices 0..m.
        struct State<'a> {
            lambda: &'a Partition,
            vars: &'a [usize],
            arity: usize,
            filling: Vec<Vec<usize>>,
            total: ZPoly,
        }
        fn rec(s: &mut State, r: usize, c: usize) {
            let rows = s.lambda.len();
            if r == rows {
                let mut exps = vec![0i32; s.arity];
                for row in &s.filling {
                    for &e in row {
                        exps[s.vars[e]] += 1;
                    }
                }
                s.total = &s.total + &ZPoly::monomial(exps, RatQ::one());
                return;
            }
            let row_len = s.lambda.part(r) as usize;
            if c == row_len {
                rec(s, r + 1, 0);
                return;
            }
            let lo_row = if c > 0 { s.filling[r][c - 1] } else { 0 };
            let lo_col = if r > 0 { s.filling[r - 1][c] + 1 } else { 0 };
            let lo = lo_row.max(lo_col);
            let m = s.vars.len();
            for e in lo..m {
                s.filling[r].push(e);
                rec(s, r, c + 1);
                s.filling[r].pop();
            }
        }
        let mut state = State {
            lambda,
            vars,
            arity,
            filling: vec![Vec::new(); rows],
            total: ZPoly::zero(arity),
        };
        rec(&mut state, 0, 0);
        state.total
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        for m in 1..=3usize {
            let vars: Vec<usize> = (0..m).collect();
            for lambda in Partition::all_up_to(4) {
                let det = schur_polynomial(&lambda, &vars, m);
                let tab = schur_by_tableaux(&lambda, &vars, m);
                assert_eq!(det, tab, "shape {lambda} in {m} variables");
            }
        }
    }

    #[test]
    fn row_and_column_shapes() {
        let vars = [0usize, 1, 2];
        // s_(k) = h_k and s_(1^k) = e_k.
        for k in 0..=4u32 {
            let row = Partition::new(vec![k]);
            assert_eq!(schur_polynomial(&row, &vars, 3), complete_homogeneous(k, &vars, 3));
            let col = Partition::new(vec![1; k as usize]);
            assert_eq!(schur_polynomial(&col, &vars, 3), elementary_polynomial(k, &vars, 3));
        }
    }

    #[test]
    fn too_many_rows_gives_zero() {
        let lambda = Partition::new(vec![1, 1, 1]);
        assert!(schur_polynomial(&lambda, &[0, 1], 2).is_zero());
        assert!(elementary_polynomial(3, &[0, 1], 2).is_zero());
    }

    #[test]
    fn pieri_for_a_square() {
        // s_(1) * s_(1) = s_(2) + s_(1,1) in >= 2 variables.
        let vars = [0usize, 1, 2];
        let s1 = schur_polynomial(&Partition::new(vec![1]), &vars, 3);
        let lhs = &s1 * &s1;
        let rhs = &schur_polynomial(&Partition::new(vec![2]), &vars, 3)
            + &schur_polynomial(&Partition::new(vec![1, 1]), &vars, 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_specialization() {
        // Setting every variable exponent weight to one counts tableaux:
        // s_(2,1) in 3 variables has 8 monomials counted with multiplicity.
        let vars = [0usize, 1, 2];
        let s = schur_polynomial(&Partition::new(vec![2, 1]), &vars, 3);
        let count: RatQ = s
            .terms()
            .fold(RatQ::zero(), |acc, (_, c)| &acc + c);
        assert_eq!(count, RatQ::from_int(8));
    }

    #[test]
    fn permutation_stepper_is_exhaustive() {
        let mut perm = vec![0usize, 1, 2];
        let mut seen = vec![perm.clone()];
        while next_permutation(&mut perm) {
            seen.push(perm.clone());
        }
        assert_eq!(seen.len(), 6);
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }
}
