use std::sync::Arc;

use crate::error::Result;
use crate::exactmath::FieldElem;
use crate::hopf::{dual, HopfAlgebraData};
use crate::rep::irr::{irr_characters, IrrData};

/// `H`, `H*`, `Irr(H)` and `Irr(H*)` computed once.
#[derive(Debug, Clone)]
pub struct CharacterData {
    pub algebra: Arc<HopfAlgebraData>,
    pub dual: Arc<HopfAlgebraData>,
    pub irr: IrrData,
    /// `Irr(H*)`; each character's values are an element of `H`.
    pub coirr: IrrData,
}

impl CharacterData {
    pub fn new(h: Arc<HopfAlgebraData>) -> Result<Self> {
        let d = Arc::new(dual(&h));
        let irr = irr_characters(&h)?;
        let coirr = irr_characters(&d)?;
        Ok(CharacterData {
            algebra: h,
            dual: d,
            irr,
            coirr,
        })
    }

    /// The same data with the roles of `H` and `H*` exchanged.
    pub fn dualized(&self) -> Self {
        CharacterData {
            algebra: self.dual.clone(),
            dual: self.algebra.clone(),
            irr: self.coirr.clone(),
            coirr: self.irr.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `d in Irr(H*)` as an element of `H`.
    pub fn coelement(&self, d: usize) -> &[FieldElem] {
        &self.coirr.character(d).values
    }

    /// `eps(d)`.
    pub fn codegree(&self, d: usize) -> u32 {
        self.coirr.blocks[d].degree
    }
}
