#pragma once

// Textual descriptor format shared by height sequences and N_+ sequences:
//
//   {default:<val>, <prime>:<val>, ...}
//
// <val> is a decimal natural number, `inf` (heights only) or `*` (N_+ only).
// Primes must be strictly increasing. Whitespace between tokens is ignored.
// Printing is canonical: no spaces except one after each comma, and no
// entries equal to the default.

#include <string>
#include <string_view>

#include "locgenus/genus.hpp"
#include "locgenus/rankone.hpp"

namespace locgenus {

/// Throws ParseError (with position) on syntax errors, non-prime or repeated
/// keys, and `*` values.
HeightSequence parse_heights(std::string_view text);
/// Same grammar with `*` allowed and `inf` rejected.
NPlusSequence parse_nplus(std::string_view text);
PostnikovGenusDescriptor parse_descriptor(std::string_view text, unsigned dimension);

std::string to_text(const HeightSequence& h);
std::string to_text(const NPlusSequence& k);
std::string to_text(const PostnikovGenusDescriptor& k);
/// `{default:0, infinite:[2, 3]}` or `{default:inf, finite:[5]}`.
std::string to_text(const TypeClass& t);
/// `{}`, `{2, 3}`, `all` or `all except {2}`.
std::string to_text(const TorsionShape& s);

}  // namespace locgenus
