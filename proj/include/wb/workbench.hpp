#pragma once
#include <iostream>
#include <optional>
#include <string>

#include "wb/report.hpp"
#include "wb/ringdoc.hpp"

namespace wb {

struct RunFlags {
    std::optional<std::string> field_override;  // "Q" or a prime
    std::optional<int> window;
    std::optional<std::pair<int, int>> n_range;
    bool json = false;
};

// Ring-document commands: info | betti | bass | bounded | stable | classify |
// sjodin | duality.
Json run_command(const std::string& command, const RingDocument& doc,
                 const RunFlags& flags);

// Stand-alone commands.
Json run_shamash(int e, const std::string& f_text, int N, int D,
                 const FieldSpec& field);
Json run_matrix_model(int e, int max_degree, int socle_base,
                      const FieldSpec& field);

// Acceptance suite; prints one pass/fail line per criterion.
bool run_acceptance(const std::string& rings_dir, std::ostream& out);

FieldSpec parse_field_override(const std::string& text);

}  // namespace wb
