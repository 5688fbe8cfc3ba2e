#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsg/clifford.hpp"
#include "hsg/constructions.hpp"
#include "hsg/hyperspace.hpp"
#include "hsg/io.hpp"
#include "hsg/morphism.hpp"
#include "hsg/search.hpp"
#include "hsg/semigroup.hpp"

namespace {

using namespace hsg;

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string basename_of(const std::string& path) {
  std::size_t i = path.find_last_of("/\\");
  return i == std::string::npos ? path : path.substr(i + 1);
}

// The primary artifact goes to --out when given, to stdout otherwise.
// Files never carry the trailing result line.
void emit_artifact(const std::string& out_path, const std::string& artifact) {
  if (out_path.empty()) {
    std::cout << artifact;
  } else {
    write_text_file(out_path, artifact);
    std::cout << "out: " << out_path << "\n";
  }
}

int finish(const std::string& token, int code) {
  std::cout << "result: " << token << "\n";
  return code;
}

std::string classify_report(const FiniteSemigroup& s) {
  std::ostringstream os;
  ClassFlags fl = class_flags(s);
  os << "n: " << s.size() << "\n";
  os << "flags: commutative=" << yesno(fl.commutative) << " group=" << yesno(fl.group)
     << " semilattice=" << yesno(fl.semilattice) << " regular=" << yesno(fl.regular)
     << " inverse=" << yesno(fl.inverse) << " clifford=" << yesno(fl.clifford) << "\n";
  auto idem = s.idempotents();
  os << "idempotents:";
  for (int e : idem) os << ' ' << e;
  os << "\n";
  os << "strict-order:";
  for (int e : idem)
    for (int f : idem)
      if (e != f && s.prod(e, f) == e) os << ' ' << e << '<' << f;
  os << "\n";
  return os.str();
}

std::string obstruction_report(const FiniteSemigroup& s, const ObstructionReport& rep) {
  std::ostringstream os;
  if (!rep.applicable) {
    os << "regular: no\n";
    return os.str();
  }
  os << "regular: yes\n";
  os << "inverse: " << yesno(rep.inverse) << "\n";
  if (rep.clear()) {
    os << "violations: none\n";
    return os.str();
  }
  os << "violations:\n";
  if (rep.noncommuting_idempotents)
    os << "noncommuting-idempotents: e=" << s.label(rep.noncommuting_idempotents->first)
       << " f=" << s.label(rep.noncommuting_idempotents->second) << "\n";
  if (rep.nonunique_inverse)
    os << "nonunique-inverse: x=" << s.label((*rep.nonunique_inverse)[0])
       << " y1=" << s.label((*rep.nonunique_inverse)[1])
       << " y2=" << s.label((*rep.nonunique_inverse)[2]) << "\n";
  if (rep.square_inverse)
    os << "square-inverse-idempotent: x=" << s.label(rep.square_inverse->first)
       << " x^2*x^-1=" << s.label(rep.square_inverse->second) << "\n";
  if (rep.conjugated_comparable)
    os << "conjugated-comparable-idempotents: e=" << s.label((*rep.conjugated_comparable)[0])
       << " f=" << s.label((*rep.conjugated_comparable)[1])
       << " z=" << s.label((*rep.conjugated_comparable)[2]) << "\n";
  return os.str();
}

std::string classification_line(const PowerSemigroup& p, int index) {
  std::ostringstream os;
  Subset k = p.subset_of(index);
  SubsetClassification c = classify_subset(p.base, k);
  os << subset_text(k) << ":";
  if (c.is_idempotent) os << " idempotent";
  if (c.coset) {
    os << " coset(H=" << subset_text(c.coset->first) << ",x=" << c.coset->second << ")";
    if (c.is_group_element) os << " group-element";
    os << " inverse=" << subset_text(*c.unique_inverse);
  } else {
    os << " not-regular";
  }
  return os.str();
}

struct Options {
  std::string file, file2, file3;
  std::string out;
  std::string ideal;
  std::vector<std::string> files;
  int kappa = 2;
  long long max_nodes = 10'000'000;
  bool classify_elements = false;
};

int run_classify(const Options& o) {
  FiniteSemigroup s = parse_semigroup_file(o.file);
  emit_artifact(o.out, classify_report(s));
  return finish("ok", 0);
}

int run_exp(const Options& o) {
  FiniteSemigroup g = parse_semigroup_file(o.file);
  PowerSemigroup p = power_semigroup(g);
  std::ostringstream os;
  os << "# exp of " << basename_of(o.file) << " order " << p.sem.size() << "\n";
  os << serialize_semigroup(p.sem);
  emit_artifact(o.out, os.str());
  if (o.classify_elements)
    for (int i = 0; i < p.sem.size(); ++i)
      std::cout << classification_line(p, i) << "\n";
  return finish("ok", 0);
}

int run_obstruct(const Options& o) {
  FiniteSemigroup s = parse_semigroup_file(o.file);
  ObstructionReport rep = class_h_obstructions(s);
  emit_artifact(o.out, obstruction_report(s, rep));
  if (!rep.applicable) return finish("not-applicable", 0);
  if (rep.clear()) return finish("clear", 0);
  return finish("violations", 1);
}

int run_embed_clifford(const Options& o) {
  FiniteSemigroup s = parse_semigroup_file(o.file);
  EmbeddingCertificate cert;
  try {
    cert = embed_clifford(s);
  } catch (const Error& e) {
    std::cout << "refused: " << e.what() << "\n";
    return finish("not-clifford-inverse", 1);
  }
  emit_artifact(o.out, certificate_text(cert));
  std::cout << "source-elements: " << cert.source.size() << "\n";
  std::cout << "factors: " << cert.factors.size() << "\n";
  std::cout << "target-order: " << cert.target_order << "\n";
  std::cout << "materialized: " << yesno(cert.materialized) << "\n";
  std::cout << "homomorphism: " << yesno(cert.homomorphism) << "\n";
  std::cout << "injective: " << yesno(cert.injective) << "\n";
  return finish("ok", 0);
}

int run_verify_cert(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw Error("cannot open file: " + o.file);
  FiniteSemigroup s = parse_semigroup_file(o.file2);
  EmbeddingCertificate cert = read_certificate(in, s);
  CertificateReport rep = verify_certificate(cert);
  std::ostringstream os;
  os << "homomorphism: " << yesno(rep.homomorphism) << "\n";
  os << "injective: " << yesno(rep.injective) << "\n";
  os << "union-closed: " << yesno(rep.union_closed) << "\n";
  if (rep.tightened_union)
    os << "tightened-union: " << subset_text(*rep.tightened_union)
       << " order=" << rep.tightened_union->count() << "\n";
  else if (rep.pass)
    os << "tightened-union: factorwise\n";
  if (!rep.detail.empty()) os << "detail: " << rep.detail << "\n";
  emit_artifact(o.out, os.str());
  return rep.pass ? finish("pass", 0) : finish("fail", 1);
}

int run_search_embed(const Options& o) {
  FiniteSemigroup s = parse_semigroup_file(o.file);
  FiniteSemigroup t = parse_semigroup_file(o.file2);
  SearchResult r = find_embedding(s, t, SearchBudget{o.max_nodes});
  std::ostringstream os;
  switch (r.status) {
    case SearchStatus::Found: {
      os << "status: found\n";
      os << "map:";
      for (int x = 0; x < s.size(); ++x) os << ' ' << x << "->" << r.morphism->map[x];
      os << "\n";
      break;
    }
    case SearchStatus::NoneExhaustive:
      os << "status: none-exhaustive\n";
      break;
    case SearchStatus::NoneBudget:
      os << "status: none-budget\n";
      break;
  }
  os << "nodes: " << r.nodes << "\n";
  emit_artifact(o.out, os.str());
  if (r.status == SearchStatus::Found) return finish("found", 0);
  if (r.status == SearchStatus::NoneExhaustive) return finish("none-exhaustive", 1);
  return finish("none-budget", 3);
}

int emit_construction(const Options& o, const FiniteSemigroup& s) {
  emit_artifact(o.out, serialize_semigroup(s));
  std::cout << "elements: " << s.size() << "\n";
  return finish("ok", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroups, power semigroups of groups, and verified embeddings"};
  app.require_subcommand(1);

  Options o;

  auto* classify = app.add_subcommand("classify", "class flags and idempotent order");
  classify->add_option("file", o.file, "Cayley-table file")->required();
  classify->add_option("--out", o.out, "write the report to a file");

  auto* exp = app.add_subcommand("exp", "power semigroup of a group");
  exp->add_option("file", o.file, "group file")->required();
  exp->add_flag("--classify-elements", o.classify_elements,
                "coset classification of every subset");
  exp->add_option("--out", o.out, "write the table to a file");

  auto* obstruct = app.add_subcommand("obstruct", "embeddability obstructions");
  obstruct->add_option("file", o.file, "Cayley-table file")->required();
  obstruct->add_option("--out", o.out, "write the report to a file");

  auto* embed = app.add_subcommand("embed-clifford", "embedding certificate");
  embed->add_option("file", o.file, "Cayley-table file")->required();
  embed->add_option("--out", o.out, "write the certificate to a file");

  auto* verify = app.add_subcommand("verify-cert", "re-verify a certificate");
  verify->add_option("cert", o.file, "certificate file")->required();
  verify->add_option("source", o.file2, "source Cayley-table file")->required();
  verify->add_option("--out", o.out, "write the report to a file");

  auto* search = app.add_subcommand("search-embed", "brute-force embedding search");
  search->add_option("source", o.file, "source file")->required();
  search->add_option("target", o.file2, "target file")->required();
  search->add_option("--max-nodes", o.max_nodes, "search budget");
  search->add_option("--out", o.out, "write the report to a file");

  auto* construct = app.add_subcommand("construct", "build derived semigroups");
  construct->require_subcommand(1);
  auto* cbrandt = construct->add_subcommand("brandt", "Brandt semigroup B(H,kappa)");
  cbrandt->add_option("group", o.file, "group file")->required();
  cbrandt->add_option("kappa", o.kappa, "index-set size")->required();
  cbrandt->add_option("--out", o.out, "output file");
  auto* czero = construct->add_subcommand("zero", "attach an absorbing zero");
  czero->add_option("file", o.file, "Cayley-table file")->required();
  czero->add_option("--out", o.out, "output file");
  auto* csemi = construct->add_subcommand("semidirect", "semidirect product");
  csemi->add_option("s", o.file, "semigroup file")->required();
  csemi->add_option("g", o.file2, "group file")->required();
  csemi->add_option("action", o.file3, "action file")->required();
  csemi->add_option("--out", o.out, "output file");
  auto* chol = construct->add_subcommand("holomorph", "semidirect with Aut(S)");
  chol->add_option("file", o.file, "Cayley-table file")->required();
  chol->add_option("--out", o.out, "output file");
  auto* cprod = construct->add_subcommand("product", "direct product");
  cprod->add_option("files", o.files, "factor files")->required()->expected(-1);
  cprod->add_option("--out", o.out, "output file");
  auto* ce3 = construct->add_subcommand("e3", "the 3-element semilattice {e,f,ef}");
  ce3->add_option("--out", o.out, "output file");
  auto* crees = construct->add_subcommand("rees", "collapse an ideal to zero");
  crees->add_option("file", o.file, "Cayley-table file")->required();
  crees->add_option("ideal", o.ideal, "ideal as a subset {i,j,...}")->required();
  crees->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return run_classify(o);
    if (*exp) return run_exp(o);
    if (*obstruct) return run_obstruct(o);
    if (*embed) return run_embed_clifford(o);
    if (*verify) return run_verify_cert(o);
    if (*search) return run_search_embed(o);
    if (*construct) {
      if (*cbrandt)
        return emit_construction(o, brandt(parse_semigroup_file(o.file), o.kappa));
      if (*czero) return emit_construction(o, attach_zero(parse_semigroup_file(o.file)));
      if (*csemi) {
        FiniteSemigroup s = parse_semigroup_file(o.file);
        FiniteSemigroup g = parse_semigroup_file(o.file2);
        std::ifstream in(o.file3);
        if (!in) throw Error("cannot open file: " + o.file3);
        GroupAction a{parse_action_perms(in, g.size(), s.size())};
        return emit_construction(o, semidirect_product(s, g, a));
      }
      if (*chol) return emit_construction(o, holomorph(parse_semigroup_file(o.file)));
      if (*cprod) {
        std::vector<FiniteSemigroup> parts;
        for (const auto& f : o.files) parts.push_back(parse_semigroup_file(f));
        return emit_construction(o, direct_product(parts));
      }
      if (*ce3) return emit_construction(o, e3_semilattice());
      if (*crees) {
        FiniteSemigroup s = parse_semigroup_file(o.file);
        Bitset ideal = parse_subset(o.ideal, s.size());
        return emit_construction(o, rees_quotient(s, ideal));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "result: error\n";
    return 2;
  }
  return 2;
}
