//! Fusion rules and the self-braiding of simple objects.

use super::morphism::VerMorphism;
use super::object::VerObject;
use crate::error::{Error, Result};
use crate::ff_linalg::{check_prime, fp};
use crate::rep_alphap::swap_matrix;

fn check_type(p: u32, i: usize) -> Result<()> {
    check_prime(p)?;
    if (1..p as usize).contains(&i) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("simple type {i} for p = {p}")))
    }
}

/// Multiplicities of L_i ⊗ L_j by the truncated Clebsch-Gordan rule:
/// one copy of L_{|i−j|+2k−1} for k = 1, …, min(i, j, p−i, p−j).
pub fn fusion_rule(p: u32, i: usize, j: usize) -> Result<Vec<usize>> {
    check_type(p, i)?;
    check_type(p, j)?;
    let pu = p as usize;
    let top = i.min(j).min(pu - i).min(pu - j);
    let mut mult = vec![0; pu - 1];
    for k in 1..=top {
        mult[i.abs_diff(j) + 2 * k - 2] += 1;
    }
    Ok(mult)
}

/// Multiplicities and number of negligible blocks of L_i ⊗ L_j, computed
/// from the Jordan decomposition of the upstairs tensor product.
pub fn fusion_upstairs(p: u32, i: usize, j: usize) -> Result<(Vec<usize>, usize)> {
    check_type(p, i)?;
    check_type(p, j)?;
    let t = VerObject::tensor(&VerObject::simple(p, i), &VerObject::simple(p, j));
    Ok((t.mult().to_vec(), t.negligible_count()))
}

/// Signs of the self-braiding of L_i ⊗ L_i on its simple summands
/// L_{2k−1}, k = 1, …, min(i, p−i), read off the projected swap map.
pub fn self_braiding_signs(p: u32, i: usize) -> Result<Vec<i64>> {
    check_type(p, i)?;
    let li = VerObject::simple(p, i);
    let t = VerObject::tensor(&li, &li);
    let c = VerMorphism::semisimplify(&swap_matrix(p, i, i), &t, &t);
    let top = i.min(p as usize - i);
    let mut signs = Vec::with_capacity(top);
    for k in 1..=top {
        let b = c.block(2 * k - 1);
        if b.shape() != (1, 1) {
            return Err(Error::InvalidInput(format!("L{} occurs {} times in L{i}⊗L{i}", 2 * k - 1, b.rows())));
        }
        let s = fp::to_signed(b.get(0, 0), p);
        if s.abs() != 1 {
            return Err(Error::InvalidInput(format!("braiding entry {s} on L{}", 2 * k - 1)));
        }
        signs.push(s);
    }
    Ok(signs)
}

/// Formats a sign vector as "[-1, 1]".
pub fn format_signs(signs: &[i64]) -> String {
    let parts: Vec<String> = signs.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}
