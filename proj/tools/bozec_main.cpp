#include "CLI11.hpp"

#include "bozec/characters.hpp"
#include "bozec/datum_io.hpp"
#include "bozec/modules.hpp"
#include "bozec/pairing.hpp"
#include "bozec/rtheta.hpp"

#include <algorithm>
#include <iostream>

using namespace bozec;

namespace {

std::string offset_str(const RootWeight& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + ")";
}

std::string degree_label(const CartanDatum& dat, const ExDegree& nu) {
  if (nu.parts() == 0) return "[]";
  std::string s;
  for (const Letter& c : nu.sorted_word())
    s += "[" + dat.name(c.i) + "," + std::to_string(c.l) + "]";
  return s;
}

void print_matrix(const QMatrix& m, const std::string& indent) {
  for (const auto& row : m) {
    std::cout << indent;
    for (size_t k = 0; k < row.size(); ++k)
      std::cout << (k ? "  " : "") << row[k].str();
    std::cout << "\n";
  }
}

std::vector<long> resolve_weight(const DatumFile& f, const std::vector<long>& flag) {
  if (!flag.empty()) {
    if (flag.size() != f.datum.n())
      throw DatumError("weight has " + std::to_string(flag.size()) +
                       " entries, datum has rank " + std::to_string(f.datum.n()));
    return flag;
  }
  if (f.anchor_weight) return *f.anchor_weight;
  throw DatumError("no weight given: pass --weight or set anchor_weight in the datum");
}

std::vector<RootWeight> sorted_offsets(const std::map<RootWeight, long>& m) {
  std::vector<RootWeight> keys;
  for (const auto& [k, v] : m) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const RootWeight& a, const RootWeight& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return keys;
}

int cmd_validate(const DatumFile& f) {
  const CartanDatum& dat = f.datum;
  std::cout << "rank " << dat.n() << "\n";
  for (size_t i = 0; i < dat.n(); ++i) {
    std::cout << "index " << dat.name(i) << ": parity " << dat.parity(i) << ", d "
              << dat.d(i) << ", ";
    if (dat.is_real(i))
      std::cout << "real";
    else
      std::cout << (dat.is_isotropic(i) ? "imaginary isotropic"
                                        : "imaginary non-isotropic");
    std::cout << "\n";
  }
  ValidationReport rep = dat.validate();
  std::cout << "bar-consistent: " << (rep.bar_consistent ? "yes" : "no") << "\n";
  std::cout << "valid\n";
  return 0;
}

int cmd_dim(const DatumFile& f, long depth) {
  BlockTower tower(f.datum, depth);
  std::map<RootWeight, long> by_weight;
  for (const ExDegree& nu : exdegrees_up_to(f.datum, depth)) {
    const GramBlock& b = tower.full_block(nu);
    std::cout << "degree " << degree_label(f.datum, nu) << ": dim "
              << b.basis_words.size() << ", rank " << b.rank << ", radical "
              << (b.basis_words.size() - b.rank) << "\n";
    for (const Word& w : b.pivot_words)
      std::cout << "  pivot " << word_str(f.datum, w, 'a') << "\n";
    by_weight[nu.weight(f.datum)] += static_cast<long>(b.rank);
  }
  for (const RootWeight& b : sorted_offsets(by_weight))
    std::cout << "weight " << offset_str(b) << ": dim " << by_weight[b] << "\n";
  return 0;
}

int cmd_gram(const DatumFile& f, long depth) {
  BlockTower tower(f.datum, depth);
  for (const ExDegree& nu : exdegrees_up_to(f.datum, depth)) {
    const GramBlock& b = tower.block(nu);
    std::cout << "degree " << degree_label(f.datum, nu) << "\n";
    for (const Word& w : b.basis_words)
      std::cout << "  word " << word_str(f.datum, w, 'a') << "\n";
    print_matrix(b.gram, "  ");
  }
  return 0;
}

int cmd_serre(const DatumFile& f, long depth) {
  BlockTower tower(f.datum, depth);
  bool all_in = true;
  std::vector<LabeledRelation> rels = serre_relations(f.datum, depth, 4, 2);
  for (const LabeledRelation& r : rels) {
    bool in = tower.radical_membership(r.elt).in_radical;
    all_in = all_in && in;
    std::cout << r.label << ": in radical: " << (in ? "yes" : "no") << "\n";
  }
  std::cout << rels.size() << " relations checked\n";
  return all_in ? 0 : 1;
}

int cmd_theta(const DatumFile& f, long height) {
  BlockTower tower(f.datum, height);
  ThetaExpansion th(tower, height);
  for (const ExDegree& nu : th.degrees()) {
    const ThetaBlock& b = th.block(nu);
    std::cout << "block " << degree_label(f.datum, nu) << ": sign "
              << (b.sign < 0 ? "-1" : "+1") << ", words " << b.words.size() << "\n";
    for (const Word& w : b.words)
      std::cout << "  word " << word_str(f.datum, w, 'a') << "\n";
    print_matrix(b.coef, "  ");
  }
  return 0;
}

int cmd_verma(const DatumFile& f, const std::vector<long>& wflag, long depth) {
  std::vector<long> lam = resolve_weight(f, wflag);
  VermaModule m(f.datum, lam, depth);
  for (const RootWeight& b : offsets_up_to(f.datum, depth))
    std::cout << offset_str(b) << " : " << m.dim(b) << "\n";
  return 0;
}

int cmd_character(const DatumFile& f, const std::vector<long>& wflag, long depth,
                  const std::string& source) {
  std::vector<long> lam = resolve_weight(f, wflag);
  std::map<RootWeight, long> formula, module;
  if (source == "formula" || source == "both")
    formula = formula_character(f.datum, lam, depth).coeffs();
  if (source == "module" || source == "both") {
    VermaModule m(f.datum, lam, depth);
    module = m.quotient_character();
  }
  const std::map<RootWeight, long>& table = source == "module" ? module : formula;
  for (const RootWeight& b : sorted_offsets(table))
    std::cout << offset_str(b) << " : " << table.at(b) << "\n";
  if (source != "both") return 0;
  if (formula == module) {
    std::cout << "formula and module tables match\n";
    return 0;
  }
  std::map<RootWeight, long> keys = formula;
  keys.insert(module.begin(), module.end());
  for (const RootWeight& b : sorted_offsets(keys)) {
    long x = formula.count(b) ? formula.at(b) : 0;
    long y = module.count(b) ? module.at(b) : 0;
    if (x != y)
      std::cout << "mismatch at " << offset_str(b) << ": formula " << x
                << ", module " << y << "\n";
  }
  return 1;
}

int cmd_casimir(const DatumFile& f, const std::vector<long>& wflag, long depth) {
  std::vector<long> lam = resolve_weight(f, wflag);
  VermaModule m(f.datum, lam, depth);
  CasimirOperator cas(m);
  for (const RootWeight& b : offsets_up_to(f.datum, depth)) {
    if (m.dim(b) == 0) continue;
    std::cout << "weight " << offset_str(b) << "\n";
    const std::vector<Word>& words = m.basis(b);
    for (const Word& w : words)
      std::cout << "  " << word_str(f.datum, w, 'b') << " : q^"
                << cas.block_exponent(ExDegree(w)) << "\n";
  }
  CasimirReport rep = casimir_eigen_check(m);
  std::cout << "raise commutation: " << (rep.raise_commutation ? "ok" : "FAIL")
            << "\n";
  std::cout << "lower commutation: " << (rep.lower_commutation ? "ok" : "FAIL")
            << "\n";
  std::cout << "eigenvalue law: " << (rep.eigenvalue_law ? "ok" : "FAIL") << "\n";
  std::cout << "exponent difference identity: " << (rep.f_identity ? "ok" : "FAIL")
            << "\n";
  std::cout << "singular consistency: "
            << (rep.singular_consistency ? "ok" : "FAIL") << "\n";
  return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for quantum Borcherds-Bozec superalgebras"};
  app.require_subcommand(1);

  std::string path;
  long depth = 4;
  long theta_height = 4;
  std::vector<long> weight;
  std::string source = "formula";

  auto add_datum = [&](CLI::App* c) {
    c->add_option("datum", path, "datum JSON file")->required();
  };
  auto add_depth = [&](CLI::App* c) {
    c->add_option("--depth", depth, "truncation depth")->capture_default_str();
  };
  auto add_weight = [&](CLI::App* c) {
    c->add_option("--weight", weight, "highest weight as coroot values")
        ->delimiter(',');
  };

  CLI::App* validate = app.add_subcommand("validate", "check and describe a datum");
  add_datum(validate);

  CLI::App* dim = app.add_subcommand("dim", "per-degree ranks and weight dimensions");
  add_datum(dim);
  add_depth(dim);

  CLI::App* gram = app.add_subcommand("gram", "per-degree Gram matrices");
  add_datum(gram);
  add_depth(gram);

  CLI::App* serre = app.add_subcommand("serre-check",
                                       "radical membership of the defining relations");
  add_datum(serre);
  add_depth(serre);

  CLI::App* theta = app.add_subcommand("theta", "quasi-R-matrix blocks");
  add_datum(theta);
  theta->add_option("--height", theta_height, "expansion height")
      ->capture_default_str();

  CLI::App* verma = app.add_subcommand("verma", "universal module dimension table");
  add_datum(verma);
  add_depth(verma);
  add_weight(verma);

  CLI::App* character = app.add_subcommand("character",
                                           "irreducible character table");
  add_datum(character);
  add_depth(character);
  add_weight(character);
  character->add_option("--source", source, "formula, module, or both")
      ->check(CLI::IsMember({"formula", "module", "both"}))
      ->capture_default_str();

  CLI::App* casimir = app.add_subcommand("casimir",
                                         "Casimir exponents and operator checks");
  add_datum(casimir);
  add_depth(casimir);
  add_weight(casimir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    DatumFile f = load_datum_file(path);
    if (validate->parsed()) return cmd_validate(f);
    if (dim->parsed()) return cmd_dim(f, depth);
    if (gram->parsed()) return cmd_gram(f, depth);
    if (serre->parsed()) return cmd_serre(f, depth);
    if (theta->parsed()) return cmd_theta(f, theta_height);
    if (verma->parsed()) return cmd_verma(f, weight, depth);
    if (character->parsed()) return cmd_character(f, weight, depth, source);
    if (casimir->parsed()) return cmd_casimir(f, weight, depth);
  } catch (const DatumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
