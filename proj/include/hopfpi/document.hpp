#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hopfpi/brace.hpp"
#include "hopfpi/hopf.hpp"
#include "hopfpi/matched_pair.hpp"
#include "hopfpi/post_hopf.hpp"
#include "hopfpi/rota_baxter.hpp"

namespace hopfpi {

// Splitting data consumed by the factorization operator: a basis of the
// unit-graded factor and one basis per grade of the graded factor.
struct FactorizationInput {
  Mat unit_factor;
  std::vector<Mat> graded_factor;

  bool operator==(const FactorizationInput&) const = default;
};

// Standalone action blocks [a][g] with their own dimension tables, so the
// file is shape-checkable before the algebras it will act between are known.
struct ModuleAction {
  std::vector<int> acting_dims;
  std::vector<int> target_dims;
  ActionBlocks blocks;

  bool operator==(const ModuleAction&) const = default;
};

// One square-ish matrix per element of an indexing group: automorphism
// families for spreading and grade-preserving twists.
struct MapFamily {
  FiniteGroup group;
  std::vector<Mat> blocks;

  bool operator==(const MapFamily&) const = default;
};

// One self-describing file format for every structure.  The payload
// alternative determines the kind string; the field applies to every
// scalar in the payload (groups carry no scalars and no field key).
struct Document {
  using Value =
      std::variant<FiniteGroup, HopfPiAlgebra, HopfPiBrace, MatchedPair,
                   PostHopfStructure, RotaBaxterOperator, FactorizationInput,
                   ModuleAction, MapFamily>;

  Field field;
  Value value;

  // group, hopf_pi_algebra, brace, matched_pair, post_hopf, rota_baxter,
  // factorization, or action.
  std::string kind() const;

  bool operator==(const Document&) const = default;
};

// Wraps a structure, deriving the scalar field from its contents.
Document make_document(FiniteGroup g);
Document make_document(HopfPiAlgebra h);
Document make_document(HopfPiBrace b);
Document make_document(MatchedPair mp);
Document make_document(PostHopfStructure ph);
Document make_document(RotaBaxterOperator rb);
Document make_document(FactorizationInput fi);
Document make_document(ModuleAction ma);
Document make_document(MapFamily mf);

// Strict parse: the version must be recognized, every key is required, and
// unknown keys are rejected; scalars go through the exact parser.  All
// block shapes are validated before returning.  Malformed input throws
// InputError with a position where the JSON layer provides one.
Document parse_document(const std::string& text);

// Canonical bytes: sorted keys, canonical scalar spellings, two-space
// indentation, trailing newline.  parse(serialize(d)) == d and
// serialize(parse(t)) is a fixed point.
std::string serialize_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);

// The full checker suite for the document's kind.  Kinds that are pure
// input data (group, factorization, action) validate at parse time and
// return an empty passing report.
CheckReport validate_document(const Document& doc);

}  // namespace hopfpi
