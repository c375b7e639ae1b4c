//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use hopfkern::corpus::builtin;
use hopfkern::hopf::{quotient_by_ideal, HopfMorphism};
use hopfkern::kernels::hopf_ideal_im;
use hopfkern::rep::{rep_from_block, CharacterData};

pub fn character_data(name: &str) -> CharacterData {
    let h = builtin(name).expect("known builtin").build().expect("builtin builds");
    CharacterData::new(Arc::new(h)).expect("semisimple")
}

/// `pi : H -> H/I_M` for the block of character `index`.
pub fn quotient_map(data: &CharacterData, index: usize) -> HopfMorphism {
    let h = &data.algebra;
    let module = rep_from_block(h, &data.irr, index).expect("block module");
    let im = hopf_ideal_im(h, &module).expect("I_M");
    quotient_by_ideal(h, &im).expect("quotient").morphism()
}
