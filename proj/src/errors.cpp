#include "lactoep/errors.hpp"

namespace lactoep {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_coefficients: return "EmptyCoefficients";
    case errc::no_decay: return "NoDecay";
    case errc::vanishing_symbol: return "VanishingSymbol";
    case errc::nonzero_winding: return "NonzeroWinding";
    case errc::coefficient_range_too_small: return "CoefficientRangeTooSmall";
    case errc::non_square: return "NonSquare";
    case errc::too_large: return "TooLarge";
    case errc::exactly_singular: return "ExactlySingular";
    case errc::outside_domain: return "OutsideDomain";
    case errc::out_of_range: return "OutOfRange";
    case errc::duplicate_index: return "DuplicateIndex";
    case errc::mixed_anchor: return "MixedAnchor";
    case errc::plain_singular: return "PlainSingular";
    case errc::equal_radii: return "EqualRadii";
    case errc::radii_outside_annulus: return "RadiiOutsideAnnulus";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace lactoep
