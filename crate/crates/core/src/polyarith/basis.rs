use super::gcd::{gcd_nz, squarefree_factors};
use super::Polynomial;

/// Coprime squarefree basis of a family of polynomials.
///
/// Every returned polynomial is non-constant, squarefree and normalized; the
/// elements are pairwise coprime and each nonzero input equals a rational
/// constant times a product of basis elements. Constants and zeros in the
/// input are ignored. The result is sorted.
pub fn gcd_free_basis<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        for (f, _) in squarefree_factors(p) {
            insert(&mut basis, f);
        }
    }
    basis.sort();
    basis.dedup();
    basis
}

fn insert(basis: &mut Vec<Polynomial>, f: Polynomial) {
    let mut pending = vec![f];
    'outer: while let Some(f) = pending.pop() {
        if f.is_constant() {
            continue;
        }
        for i in 0..basis.len() {
            let g = gcd_nz(&f, &basis[i]);
            if g.is_constant() {
                continue;
            }
            let b = basis.swap_remove(i);
            let b_rest = b.exact_div(&g).expect("gcd divides").normalized();
            let f_rest = f.exact_div(&g).expect("gcd divides").normalized();
            // g is coprime to both cofactors since b and f are squarefree
            pending.push(f_rest);
            pending.push(b_rest);
            pending.push(g);
            continue 'outer;
        }
        basis.push(f);
    }
}
