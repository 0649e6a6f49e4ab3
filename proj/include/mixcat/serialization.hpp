#pragma once

// JSON forms of every value the command line reads or prints. Scalars are
// always strings such as "-3/4". Parse errors are InputErrors naming the
// offending field as a path like $.carrier.entries[1][0].

#include "mixcat/axioms.hpp"
#include "mixcat/compactification.hpp"
#include "mixcat/congruence.hpp"
#include "mixcat/zigzag.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mixcat {

using Json = nlohmann::ordered_json;

/// Throws InputError with line and column on malformed text.
Json parse_json_text(std::string_view text, const std::string& source);
/// Reads and parses a file; throws InputError if it cannot be read.
Json read_json_file(const std::string& path);

/// "zmod:m", "q:m" or "zloc:r:m".
Model parse_model_spec(const std::string& spec);

Json to_json(const Model& model);
Model model_from_json(const Json& j, const std::string& path = "$");

/// With `with_model` false the object has only dom, cod and entries and the
/// model comes from the enclosing value.
Json to_json(const Mor& f, bool with_model = true);
Mor mor_from_json(const Json& j, const Model* context = nullptr, const std::string& path = "$");

Json to_json(const Loop& p);
Loop loop_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Permutation& alpha);
Permutation permutation_from_json(const Json& j, const std::string& path = "$");

Json to_json(const StaircaseWitness& w);
Json to_json(const TraceResult& r);

Json to_json(const ValidationReport& r);
Json to_json(const SuiteReport& r);

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j, const std::string& path = "$");
Json to_json(const CounterPath& c);

Json to_json(const ZigZagInstance& z);
ZigZagInstance zigzag_instance_from_json(const Json& j, const std::string& path = "$");
Json to_json(const ZigZagOutcome& o);
Json to_json(const ZigZagSearchResult& r);

/// A morphism file over the compact model, plus the base model.
Json to_json(const CompactMor& m);
/// Without a "base" field the base is inferred: Z for Zloc(|m|), Q for Q.
CompactMor compact_from_json(const Json& j, const std::string& path = "$");

}  // namespace mixcat
