#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/pcategory.hpp"
#include "fuscat/verify.hpp"

namespace fuscat {

struct ParsedGroup {
  std::string name;
  GroupPtr group;
};

/// Strict JSON readers: unknown keys are rejected, indices validated, seed
/// maps given on generators are completed to full homomorphisms.
ParsedGroup parse_group_file(const std::string& path);
PCategory parse_fusion_file(const std::string& path, const Caps& caps = {});
PCategory parse_ambient_file(const std::string& path, const Caps& caps = {});

enum class InputKind { group, fusion, ambient };
InputKind detect_input(const std::string& path);
/// Accepts a fusion or ambient file and produces the category either way.
PCategory parse_category_file(const std::string& path, const Caps& caps = {});

std::string render_group_json(const GroupPtr& g, const std::string& name);

std::string render_essentials_text(const PCategory& f);
std::string render_essentials_json(const PCategory& f);

/// Completes a seed map given on a generating subset of `dom` to a full
/// morphism; throws IncompleteMap when the data does not extend.
Morphism complete_seed_morphism(const Subgroup& dom, const Subgroup& cod,
                                const std::vector<std::pair<int, int>>& assignments);

/// Content fingerprint of (group table, p, seeds); keys the result cache.
uint64_t content_fingerprint(const GroupPtr& g, int p, const std::vector<Morphism>& seeds);

/// Result cache under FUSCAT_CACHE_DIR (disabled when unset). Corrupt
/// entries raise CacheCorrupt; callers recompute and overwrite.
std::optional<PCategory> cache_load(const GroupPtr& g, int p, const std::vector<Morphism>& seeds,
                                    const Caps& caps);
void cache_store(const GroupPtr& g, int p, const std::vector<Morphism>& seeds,
                 const PCategory& f);

}  // namespace fuscat
