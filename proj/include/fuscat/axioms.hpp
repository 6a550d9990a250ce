#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/linfusion.hpp"
#include "fuscat/pcategory.hpp"

namespace fuscat {

enum class ExtensionVariant { full_twist, strict_twist };

/// A successful extension of phi to Q·N_P^K(Q), twisted by chi.
struct ExtensionWitness {
  Morphism psi;
  AutMap chi;
  ExtensionVariant variant;
};

bool is_fully_k_normalized(const PCategory& f, int q, const std::vector<AutMap>& k);
bool is_fully_normalized(const PCategory& f, int q);   // K = Aut(Q) shortcut
bool is_fully_centralized(const PCategory& f, int q);  // K = {1} shortcut

bool sylow_condition(const PCategory& f);

std::optional<ExtensionWitness> is_extensile(const PCategory& f, int q,
                                             const std::vector<AutMap>& k, const Morphism& phi,
                                             ExtensionVariant variant);

struct FrobeniusFailure {
  int q = -1;
  std::vector<AutMap> k;
  Morphism phi;
  std::string clause;  // "sylow" or "extension"
};

struct FrobeniusResult {
  bool ok = false;
  bool complete = true;  // false when the reduced K-family fallback was used
  std::optional<FrobeniusFailure> witness;
};

FrobeniusResult is_frobenius(const PCategory& f, const Caps& caps = {});
FrobeniusResult is_frobenius_serial(const PCategory& f, const Caps& caps = {});

bool is_selfcentralizing(const PCategory& f, int q);
bool is_radical(const PCategory& f, int q);
bool is_intersected(const PCategory& f, int q);

struct AlperinConditionResult {
  bool ok = true;
  int witness_q = -1;
  std::string clause;  // "radical" or "transitive"
};

AlperinConditionResult alperin_condition(const PCategory& f);

/// The normalizer subcategory N_F^K(Q), built over a standalone copy of
/// N_P^K(Q). Requires Q fully K-normalized.
PCategory normalizer_category(const PCategory& f, int q, const std::vector<AutMap>& k,
                              const Caps& caps = {});

/// Enumerates the K-subgroups of Aut(Q) in canonical order; falls back to
/// {1, F_Q(Q), Aut(Q)} when the cap is hit and the fallback is enabled.
/// Sets `complete=false` in that case.
std::vector<std::vector<AutMap>> k_families(const PCategory& f, int q, const Caps& caps,
                                            bool* complete);

}  // namespace fuscat
