//! An algebra bundled with the optional structure the checks need.

use alloc::string::String;

use crate::algebra::Algebra;
use crate::cellular::CellDatum;
use crate::trace::TraceForm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub algebra: Algebra,
    pub cell: Option<CellDatum>,
    pub trace: Option<TraceForm>,
}

impl Instance {
    pub fn new(id: impl Into<String>, algebra: Algebra) -> Instance {
        Instance {
            id: id.into(),
            algebra,
            cell: None,
            trace: None,
        }
    }

    pub fn with_cell(mut self, cell: CellDatum) -> Instance {
        self.cell = Some(cell);
        self
    }

    pub fn with_trace(mut self, trace: TraceForm) -> Instance {
        self.trace = Some(trace);
        self
    }
}
