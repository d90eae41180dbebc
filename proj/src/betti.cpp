#include "monlab/betti.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "monlab/error.hpp"

namespace monlab {

BettiTable::BettiTable(Subject subject, Coarse entries, std::optional<Fine> fine)
    : subject_(subject), entries_(std::move(entries)), fine_(std::move(fine)) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
  if (fine_) std::erase_if(*fine_, [](const auto& kv) { return kv.second == 0; });
}

std::size_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw InputError("regularity of an empty Betti table");
  int reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, rank] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

int BettiTable::max_index() const {
  if (entries_.empty()) throw InputError("projective dimension of an empty Betti table");
  return entries_.rbegin()->first.first;
}

BettiTable BettiTable::to_quotient() const {
  if (subject_ == Subject::Quotient) return *this;
  Coarse shifted{{{0, 0}, 1}};
  for (const auto& [key, rank] : entries_) shifted[{key.first + 1, key.second}] = rank;
  std::optional<Fine> fine;
  if (fine_) {
    fine.emplace();
    (*fine)[{0, 0}] = 1;
    for (const auto& [key, rank] : *fine_) (*fine)[{key.first + 1, key.second}] = rank;
  }
  return BettiTable(Subject::Quotient, std::move(shifted), std::move(fine));
}

BettiTable BettiTable::to_ideal() const {
  if (subject_ == Subject::Ideal) return *this;
  Coarse shifted;
  for (const auto& [key, rank] : entries_) {
    if (key.first > 0) shifted[{key.first - 1, key.second}] = rank;
  }
  std::optional<Fine> fine;
  if (fine_) {
    fine.emplace();
    for (const auto& [key, rank] : *fine_) {
      if (key.first > 0) (*fine)[{key.first - 1, key.second}] = rank;
    }
  }
  return BettiTable(Subject::Ideal, std::move(shifted), std::move(fine));
}

BettiTable betti_table(const Ideal& ideal, const FieldSpec& field, BettiOptions options) {
  if (ideal.is_zero()) throw InputError("Betti table of the zero ideal is undefined here");
  const Mask supp = ideal.support();
  const auto gens = ideal.masks();
  Mask linear = 0;  // variables that are themselves generators, i.e. non-vertices
  for (Mask g : gens) {
    if (popcount(g) == 1) linear |= g;
  }

  BettiTable::Coarse coarse;
  std::optional<BettiTable::Fine> fine;
  if (options.fine) fine.emplace();

  // Restrictions that differ only by non-vertices are the same complex.
  std::unordered_map<Mask, HomologyDims> full_memo;
  std::map<std::pair<Mask, int>, std::size_t> single_memo;

  auto record = [&](int i, Mask sigma, std::size_t rank) {
    if (rank == 0 || i < 0) return;
    coarse[{i, popcount(sigma)}] += rank;
    if (fine) (*fine)[{i, sigma}] += rank;
  };

  // Enumerate every submask of the support, including the support itself.
  Mask sigma = 0;
  while (true) {
    // Delta|sigma is a cone unless sigma is a union of generators it contains.
    Mask covered = 0;
    for (Mask g : gens) {
      if ((g & ~sigma) == 0) covered |= g;
    }
    if (covered == sigma && sigma != 0) {
      const Mask vertex_set = sigma & ~linear;
      const int size = popcount(sigma);
      if (options.max_index < 0) {
        auto it = full_memo.find(vertex_set);
        if (it == full_memo.end()) {
          it = full_memo.emplace(vertex_set, reduced_homology_dims(faces_avoiding(vertex_set, gens), field)).first;
        }
        const auto& dims = it->second;
        for (int p = -1; p + 1 < static_cast<int>(dims.dims.size()); ++p) {
          record(size - p - 2, sigma, dims.at(p));
        }
      } else {
        std::optional<FaceSets> faces;
        for (int i = 0; i <= options.max_index; ++i) {
          const int p = size - i - 2;
          if (p < -1) break;
          auto key = std::make_pair(vertex_set, p);
          auto it = single_memo.find(key);
          if (it == single_memo.end()) {
            if (!faces) faces = faces_avoiding(vertex_set, gens);
            it = single_memo.emplace(key, reduced_homology_dim(*faces, p, field)).first;
          }
          record(i, sigma, it->second);
        }
      }
    }
    if (sigma == supp) break;
    sigma = (sigma - supp) & supp;  // next submask in increasing order
  }
  return BettiTable(BettiTable::Subject::Ideal, std::move(coarse), std::move(fine));
}

int regularity(const Ideal& ideal, const FieldSpec& field) {
  return betti_table(ideal, field).regularity();
}

int projective_dimension(const Ideal& ideal, const FieldSpec& field) {
  return betti_table(ideal, field).max_index() + 1;
}

std::string format_betti_grid(const BettiTable& table) {
  if (table.empty()) return "(empty)\n";
  int max_i = 0, min_row = table.regularity(), max_row = min_row;
  for (const auto& [key, rank] : table.entries()) {
    max_i = std::max(max_i, key.first);
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  std::vector<std::size_t> totals(max_i + 1, 0);
  for (const auto& [key, rank] : table.entries()) totals[key.first] += rank;

  std::vector<std::vector<std::string>> cells;  // first row: column header
  std::vector<std::string> labels;
  std::vector<std::string> header, total_row;
  for (int i = 0; i <= max_i; ++i) {
    header.push_back(std::to_string(i));
    total_row.push_back(std::to_string(totals[i]));
  }
  cells.push_back(header);
  labels.push_back("");
  cells.push_back(total_row);
  labels.push_back("total:");
  for (int row = min_row; row <= max_row; ++row) {
    std::vector<std::string> line;
    for (int i = 0; i <= max_i; ++i) {
      const auto rank = table.at(i, i + row);
      line.push_back(rank ? std::to_string(rank) : ".");
    }
    cells.push_back(line);
    labels.push_back(std::to_string(row) + ":");
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(max_i + 1, 0);
  for (const auto& line : cells) {
    for (int i = 0; i <= max_i; ++i) widths[i] = std::max(widths[i], line[i].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (int i = 0; i <= max_i; ++i) {
      out << ' ' << std::string(widths[i] - cells[r][i].size(), ' ') << cells[r][i];
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, rank] : table.entries()) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  }
  nlohmann::json out{
      {"subject", table.subject() == BettiTable::Subject::Ideal ? "ideal" : "quotient"},
      {"entries", entries},
  };
  if (table.fine()) {
    nlohmann::json fine = nlohmann::json::array();
    for (const auto& [key, rank] : *table.fine()) {
      fine.push_back({{"i", key.first}, {"sigma", format_monomial(key.second)}, {"rank", rank}});
    }
    out["fine"] = fine;
  }
  return out;
}

}  // namespace monlab
