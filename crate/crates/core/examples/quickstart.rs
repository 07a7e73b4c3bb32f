use lns_core::{combine_lns, Frame, LnsConfig, SimpleSupport, SubsetIndex};

fn main() -> Result<(), lns_core::Error> {
    let frame = Frame::new(["red", "green", "blue"])?;
    let sources: Vec<_> = [(0, 0.2), (0, 0.4), (1, 0.3)]
        .into_iter()
        .map(|(outcome, weight)| {
            SimpleSupport::new(frame.clone(), SubsetIndex::singleton(outcome), weight)
                .map(|ssf| ssf.to_mass())
        })
        .collect::<Result<_, _>>()?;
    let fused = combine_lns(&sources, &LnsConfig::default())?;
    println!("conflict: {:.5}", fused.conflict());
    println!("decision: {:?}", fused.pignistic()?);
    Ok(())
}
