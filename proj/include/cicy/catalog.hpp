#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cicy {

/// The three complete-intersection K3 surface families a construction row can
/// embed, keyed by the dimension mu of the projective space containing them.
enum class K3Family {
  kQuartic,    // (4) in P^3, mu = 3
  kTwoThree,   // (2,3) in P^4, mu = 4
  kTwoTwoTwo,  // (2,2,2) in P^5, mu = 5
};

K3Family k3_family_for_mu(int mu);
int k3_degree(K3Family family);  // 2 mu - 2
std::string_view to_string(K3Family family);

/// A Calabi-Yau complete-intersection threefold type: the multiset of
/// hypersurface degrees together with the ambient projective dimension.
///
/// Only the five adjunction-compatible types exist; anything else is rejected
/// at construction with "not a CICY type".
class CicyType {
 public:
  /// Degrees may be given in any order; they are stored sorted descending.
  CicyType(std::vector<int> degrees, int ambient);

  /// Builds the type from its degree multiset alone (the ambient dimension is
  /// forced by adjunction: r = sum(degrees) - 1).
  static CicyType from_degrees(std::vector<int> degrees);

  /// Parses "5", "4,2", "2,4", "3,2,2", ... (whitespace tolerant).
  static CicyType parse(std::string_view text);

  /// The five types in the order (5), (4,2), (3,3), (3,2,2), (2,2,2,2).
  static const std::vector<CicyType>& all();

  const std::vector<int>& degrees() const { return degrees_; }
  int ambient() const { return ambient_; }

  /// Comma-joined descending degrees, e.g. "4,2".
  std::string label() const;

  friend bool operator==(const CicyType&, const CicyType&) = default;

 private:
  std::vector<int> degrees_;
  int ambient_ = 0;
};

/// One construction of a nodal CICY containing a K3 surface: the threefold
/// degrees b, the K3 ideal generator degrees a, and the resulting node count.
struct ConstructionRow {
  int table_index = 0;     // 1-based position in the construction table
  std::vector<int> b;      // threefold degrees, table order
  std::vector<int> a;      // K3 ideal generator degrees, table order
  int mu = 0;              // the K3 lives in P^mu
  int r = 0;               // ambient dimension
  int ell = 0;             // number of nodes of Y lying on X
  int a_penult = 0;        // a_{r-3} (1-based)
  int a_last = 0;          // a_{r-2} (1-based)
  std::string sing_desc;   // singular locus as printed in the table; never parsed

  K3Family family() const { return k3_family_for_mu(mu); }
  /// The type of threefold this row builds (b as a multiset).
  CicyType cicy_type() const { return CicyType(b, r); }
  std::string b_label() const;
  std::string a_label() const;
};

/// The nine construction rows, in table order. The storage is static and
/// immutable; the returned span stays valid for the program lifetime.
std::span<const ConstructionRow> load_catalog();

/// Lists every violated row invariant; empty when the row is consistent.
/// Messages are stable strings (see catalog.cpp) so callers may match them.
std::vector<std::string> validate_row(const ConstructionRow& row);

/// Every row whose b-multiset equals the type's degrees, in table order.
std::vector<ConstructionRow> rows_for_type(const CicyType& type);

}  // namespace cicy
