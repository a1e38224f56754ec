#pragma once

#include <string>

#include "klrc/binf.hpp"
#include "klrc/cartan.hpp"
#include "klrc/character.hpp"
#include "klrc/cyclotomic.hpp"
#include "klrc/klr_algebra.hpp"
#include "klrc/laurent.hpp"

namespace klrc {

// JSON text formats (all deterministic):
//   datum      {"labels":["1","2"],"bilinear":[[2,-1],[-1,2]]}
//   laurent    {"-1":1,"1":1}                       (exponent -> coefficient)
//   character  {"nu":{"1":2,"2":1},"terms":[{"word":["1","2","1"],"coeff":{"0":1}}]}
//   element    {"nu":{"1":2},"terms":[{"word":["1","1"],"perm":[1],"dots":[0,1],"coeff":"3/2"}]}
// Words are arrays of vertex labels; "perm" entries and strand numbers are
// 1-based in serialized form (internal indices are 0-based).

std::string datum_to_json(const CartanDatum& d);
CartanDatum datum_from_json(const std::string& text);
CartanDatum load_datum(const std::string& path);

std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

std::string character_to_json(const CartanDatum& d, const Character& ch);
Character character_from_json(const CartanDatum& d, const std::string& text);
Character load_character(const CartanDatum& d, const std::string& path);

std::string klr_element_to_json(const CartanDatum& d, const KlrElement& element);
KlrElement klr_element_from_json(const CartanDatum& d, const std::string& text);
KlrElement load_klr_element(const CartanDatum& d, const std::string& path);

// Compact single-token rendering for CSV cells, e.g. "q^-2+2+q^2".
std::string compact_laurent(const LaurentPoly& p);

// CSV: header "nu,lambda,dim,graded_dim" plus one row.
std::string presentation_to_csv(const CyclotomicPresentation& p);
std::string presentation_to_json(const CartanDatum& d, const CyclotomicPresentation& p);

// CSV: header "weight_coords,count", one row per occupied content.
std::string multiplicities_to_csv(const CrystalGraph& g);
std::string graph_to_json(const CrystalGraph& g);

std::string read_text_file(const std::string& path);

}  // namespace klrc
