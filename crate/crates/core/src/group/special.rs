//! The distinguished roots β5, β7 and the central involution z of ⟨r3,r4,r5⟩.

use crate::error::{Error, Result};
use crate::ring::{Golden, GoldenNumber};
use crate::roots::{Root, RootSystem};

use super::{element_from_word, GroupElement};

/// r2 r1 r2 r1 r3 r2 (0-based), the element carrying β1 to β5.
pub const BETA5_WORD: [usize; 6] = [1, 0, 1, 0, 2, 1];

/// Reflection in β5: the conjugate of r1 by [`BETA5_WORD`].
pub fn r5_word() -> Vec<usize> {
    let mut w = BETA5_WORD.to_vec();
    w.push(0);
    w.extend(BETA5_WORD.iter().rev());
    w
}

fn require_h(system: &RootSystem<GoldenNumber>, min_rank: usize) -> Result<()> {
    let name = system.spec().name();
    if !(name == "H3" || name == "H4") || system.rank() < min_rank {
        return Err(Error::UnsupportedDiagram(format!("{name}: expected H3 or H4")));
    }
    Ok(())
}

/// β5 = φ²β1 + 2φβ2 + φβ3, obtained as r2r1r2r1r3r2·β1 and checked against
/// the closed form.
pub fn beta5(system: &RootSystem<GoldenNumber>) -> Result<Root<GoldenNumber>> {
    require_h(system, 3)?;
    let w = element_from_word(system, &BETA5_WORD)?;
    let image = system.signed_root(w.apply_index(0))?;
    let mut expected = vec![Golden::new(1, 1), Golden::new(0, 2), Golden::new(0, 1)];
    expected.resize(system.rank(), Golden::new(0, 0));
    let expected = Root::new(expected);
    if image != expected {
        return Err(Error::Inconsistent(format!("β5 computed as {image:?}, expected {expected:?}")));
    }
    Ok(image)
}

/// The unique positive root of H4 orthogonal to β1, β3 and β5.
pub fn beta7(system: &RootSystem<GoldenNumber>) -> Result<Root<GoldenNumber>> {
    require_h(system, 4)?;
    let b5 = system.index_of(&beta5(system)?).ok_or(Error::NotARoot)?;
    let mut hits =
        (0..system.len()).filter(|&i| system.orthogonal(i, 0) && system.orthogonal(i, 2) && system.orthogonal(i, b5));
    match (hits.next(), hits.next()) {
        (Some(i), None) => Ok(system.root(i).clone()),
        _ => Err(Error::Inconsistent("β7 is not unique".into())),
    }
}

/// z = (r5 r3 r4)⁵, the central involution of ⟨r3, r4, r5⟩ ≅ W(H3) in W(H4).
pub fn central_element_z(system: &RootSystem<GoldenNumber>) -> Result<GroupElement> {
    require_h(system, 4)?;
    let mut word = r5_word();
    word.extend([2, 3]);
    let x = element_from_word(system, &word)?;
    Ok(x.pow(5))
}
