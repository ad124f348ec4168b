//! Transition identities between power sums and the elementary and complete
//! homogeneous families, and the constant-term inner product on Laurent
//! polynomials under which Schur polynomials are orthonormal.
//!
//! Expansions are stored as maps from a [`Partition`] `lambda` (standing for
//! the monomial `p_{lambda_1} p_{lambda_2} ...` or `e_{...}`, `h_{...}`
//! likewise) to a rational coefficient. All recursions are the classical
//! ones obtained from `log` and `exp` of generating series.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num::{BigRational, FromPrimitive, Zero};

use super::{Partition, RatQ, ZPoly};

/// A symmetric function written in monomials of one generating family,
/// keyed by the partition of generator indices.
pub type Expansion = BTreeMap<Partition, BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_i64(n).expect("rat: i64 embeds")
}

fn add_term(map: &mut Expansion, key: Partition, coeff: BigRational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Multiply an expansion by the single generator indexed `r` (i.e. append a
/// part `r` to every key).
fn append_part(map: &Expansion, r: u32, scale: &BigRational) -> Expansion {
    let mut out = Expansion::new();
    for (key, coeff) in map {
        let mut parts = key.parts().to_vec();
        parts.push(r);
        add_term(&mut out, Partition::new(parts), coeff * scale);
    }
    out
}

fn merge(into: &mut Expansion, from: Expansion) {
    for (key, coeff) in from {
        add_term(into, key, coeff);
    }
}

/// Expansions of `e_1, ..., e_m` in power-sum monomials:
/// `m e_m = sum_{r=1}^{m} (-1)^{r-1} p_r e_{m-r}`.
fn elementary_table(m: u32) -> Vec<Expansion> {
    let mut table: Vec<Expansion> = Vec::with_capacity(m as usize + 1);
    let mut one = Expansion::new();
    one.insert(Partition::empty(), rat(1));
    table.push(one);
    for j in 1..=m {
        let mut acc = Expansion::new();
        for r in 1..=j {
            let sign = if (r - 1) % 2 == 0 { rat(1) } else { rat(-1) };
            merge(&mut acc, append_part(&table[(j - r) as usize], r, &sign));
        }
        let inv = rat(1) / rat(j as i64);
        for coeff in acc.values_mut() {
            *coeff *= &inv;
        }
        table.push(acc);
    }
    table
}

/// Expansions of `h_1, ..., h_m` in power-sum monomials:
/// `m h_m = sum_{r=1}^{m} p_r h_{m-r}`.
fn homogeneous_table(m: u32) -> Vec<Expansion> {
    let mut table: Vec<Expansion> = Vec::with_capacity(m as usize + 1);
    let mut one = Expansion::new();
    one.insert(Partition::empty(), rat(1));
    table.push(one);
    for j in 1..=m {
        let mut acc = Expansion::new();
        for r in 1..=j {
            merge(&mut acc, append_part(&table[(j - r) as usize], r, &rat(1)));
        }
        let inv = rat(1) / rat(j as i64);
        for coeff in acc.values_mut() {
            *coeff *= &inv;
        }
        table.push(acc);
    }
    table
}

/// `e_m` as a rational combination of power-sum monomials `p_lambda`.
pub fn elementary_to_power_sums(m: u32) -> Expansion {
    elementary_table(m).pop().expect("elementary_table: nonempty")
}

/// `h_m` as a rational combination of power-sum monomials `p_lambda`.
pub fn homogeneous_to_power_sums(m: u32) -> Expansion {
    homogeneous_table(m).pop().expect("homogeneous_table: nonempty")
}

/// `p_m` as an integral combination of elementary monomials `e_lambda`:
/// `p_m = (-1)^{m-1} ( m e_m - sum_{r=1}^{m-1} (-1)^{r-1} p_r e_{m-r} )`.
pub fn power_sums_to_elementary(m: u32) -> Expansion {
    let mut table: Vec<Expansion> = Vec::with_capacity(m as usize + 1);
    table.push(Expansion::new());
    for j in 1..=m {
        let mut acc = Expansion::new();
        let mut top = Expansion::new();
        top.insert(Partition::new(vec![j]), rat(j as i64));
        merge(&mut acc, top);
        for r in 1..=j - 1 {
            let sign = if (r - 1) % 2 == 0 { rat(-1) } else { rat(1) };
            merge(&mut acc, append_part(&table[r as usize], j - r, &sign));
        }
        if j % 2 == 0 {
            for coeff in acc.values_mut() {
                *coeff = -coeff.clone();
            }
        }
        table.push(acc);
    }
    table.pop().expect("power_sums_to_elementary: nonempty")
}

/// `p_m` as an integral combination of complete monomials `h_lambda`:
/// `p_m = m h_m - sum_{r=1}^{m-1} p_r h_{m-r}`.
pub fn power_sums_to_homogeneous(m: u32) -> Expansion {
    let mut table: Vec<Expansion> = Vec::with_capacity(m as usize + 1);
    table.push(Expansion::new());
    for j in 1..=m {
        let mut acc = Expansion::new();
        let mut top = Expansion::new();
        top.insert(Partition::new(vec![j]), rat(j as i64));
        merge(&mut acc, top);
        for r in 1..=j - 1 {
            merge(&mut acc, append_part(&table[r as usize], j - r, &rat(-1)));
        }
        table.push(acc);
    }
    table.pop().expect("power_sums_to_homogeneous: nonempty")
}

/// Evaluate an expansion in power-sum monomials at concrete variables:
/// `p_r` becomes `sum_{v in vars} z_v^r`.
pub fn evaluate_power_expansion(expansion: &Expansion, vars: &[usize], arity: usize) -> ZPoly {
    let max_part = expansion.keys().map(|p| p.part(0)).max().unwrap_or(0);
    let power_sum: Vec<ZPoly> = (0..=max_part)
        .map(|r| {
            let mut s = ZPoly::zero(arity);
            for &v in vars {
                s = &s + &ZPoly::var_pow(arity, v, r as i32, RatQ::one());
            }
            s
        })
        .collect();
    let mut total = ZPoly::zero(arity);
    for (key, coeff) in expansion {
        let mut prod = ZPoly::constant(arity, RatQ::from_rational(coeff));
        for &part in key.parts() {
            prod = &prod * &power_sum[part as usize];
        }
        total = &total + &prod;
    }
    total
}

/// The constant-term inner product
/// `<f, g> = prod_b (1/|b|!) [ f(z) g(z^{-1}) prod_{mu != nu in b} (1 - z_mu z_nu^{-1}) ]_1`
/// where `b` runs over the blocks (which must partition the variable set)
/// and `[.]_1` takes the constant term in all variables. Schur polynomials
/// in the variables of the blocks are orthonormal for it.
pub fn macdonald_pair(f: &ZPoly, g: &ZPoly, blocks: &[Vec<usize>]) -> RatQ {
    let arity = f.arity();
    assert_eq!(arity, g.arity(), "macdonald_pair: arity mismatch");
    let mut seen = vec![false; arity];
    for block in blocks {
        for &v in block {
            assert!(v < arity && !seen[v], "macdonald_pair: blocks must partition the variables");
            seen[v] = true;
        }
    }
    assert!(seen.iter().all(|&s| s), "macdonald_pair: blocks must cover all variables");

    let mut product = f * &g.invert_vars();
    let mut denominator = rat(1);
    for block in blocks {
        for &mu in block {
            for &nu in block {
                if mu != nu {
                    let factor = ZPoly::one(arity)
                        - ZPoly::monomial(
                            {
                                let mut e = vec![0; arity];
                                e[mu] = 1;
                                e[nu] = -1;
                                e
                            },
                            RatQ::one(),
                        );
                    product = &product * &factor;
                }
            }
        }
        let mut fact = rat(1);
        for j in 1..=block.len() as i64 {
            fact *= rat(j);
        }
        denominator *= fact;
    }
    let ct = product.constant_term();
    &ct * &RatQ::from_rational(&(rat(1) / denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsymbolic::{complete_homogeneous, elementary_polynomial, schur_polynomial};

    #[test]
    fn expansions_evaluate_to_the_polynomials() {
        let vars = [0usize, 1, 2];
        for m in 1..=5u32 {
            let e = evaluate_power_expansion(&elementary_to_power_sums(m), &vars, 3);
            assert_eq!(e, elementary_polynomial(m, &vars, 3), "e_{m} in power sums");
            let h = evaluate_power_expansion(&homogeneous_to_power_sums(m), &vars, 3);
            assert_eq!(h, complete_homogeneous(m, &vars, 3), "h_{m} in power sums");
        }
    }

    #[test]
    fn power_sum_round_trip() {
        // Substitute the p-expansion of each e-part back into the e-expansion
        // of p_m; the result must be the single monomial p_(m).
        for m in 1..=5u32 {
            let in_e = power_sums_to_elementary(m);
            let mut total = Expansion::new();
            for (key, coeff) in &in_e {
                let mut prod = Expansion::new();
                prod.insert(Partition::empty(), coeff.clone());
                for &part in key.parts() {
                    let factor = elementary_to_power_sums(part);
                    let mut next = Expansion::new();
                    for (k1, c1) in &prod {
                        for (k2, c2) in &factor {
                            let mut parts = k1.parts().to_vec();
                            parts.extend_from_slice(k2.parts());
                            add_term(&mut next, Partition::new(parts), c1 * c2);
                        }
                    }
                    prod = next;
                }
                merge(&mut total, prod);
            }
            total.retain(|_, c| !c.is_zero());
            let mut expected = Expansion::new();
            expected.insert(Partition::new(vec![m]), rat(1));
            assert_eq!(total, expected, "round trip for p_{m}");
        }
    }

    #[test]
    fn homogeneous_transition_has_integer_coefficients() {
        for m in 1..=6u32 {
            for (key, coeff) in power_sums_to_homogeneous(m) {
                assert!(coeff.is_integer(), "p_{m} in h basis, key {key}: {coeff}");
            }
        }
    }

    #[test]
    fn schur_orthonormality_single_block() {
        let m = 2usize;
        let vars: Vec<usize> = (0..m).collect();
        let blocks = vec![vars.clone()];
        let shapes = Partition::all_bounded(3, m);
        for a in &shapes {
            for b in &shapes {
                let fa = schur_polynomial(a, &vars, m);
                let fb = schur_polynomial(b, &vars, m);
                let pairing = macdonald_pair(&fa, &fb, &blocks);
                let expected = if a == b { RatQ::one() } else { RatQ::zero() };
                assert_eq!(pairing, expected, "<s_{a}, s_{b}>");
            }
        }
    }

    #[test]
    fn pairing_respects_blocks() {
        // Two one-variable blocks: <z0^a z1^b, z0^a z1^b> = 1.
        let blocks = vec![vec![0usize], vec![1usize]];
        let f = ZPoly::monomial(vec![2, 1], RatQ::one());
        assert_eq!(macdonald_pair(&f, &f, &blocks), RatQ::one());
        let g = ZPoly::monomial(vec![1, 2], RatQ::one());
        assert_eq!(macdonald_pair(&f, &g, &blocks), RatQ::zero());
    }
}
