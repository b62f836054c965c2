// Writes the example corpus and the forced-failure fixtures.
// usage: corpus_gen <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfmon/double.hpp"
#include "hopfmon/presentation.hpp"
#include "hopfmon/quasitriangular.hpp"

using namespace hopfmon;
namespace fs = std::filesystem;

namespace {

Presentation with_r(const HopfPtr& H, std::vector<std::pair<std::string, TensorElement>> rs = {}) {
  Presentation p;
  p.algebra = H->algebra();
  p.hopf = H;
  p.r_matrices = std::move(rs);
  return p;
}

std::string write(const fs::path& dir, const std::string& name, const std::string& text) {
  std::ofstream out(dir / name, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  return name;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  if (at == std::string::npos) throw std::runtime_error("fixture anchor not found: " + from);
  return s.replace(at, from.size(), to);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: corpus_gen <output-dir>\n";
    return 2;
  }
  try {
    const fs::path dir = argv[1];
    const fs::path fix = dir / "fixtures";
    fs::create_directories(fix);

    auto z2 = group_algebra("Z2", cyclic_group_table(2), cyclic_group_labels(2));
    auto z3 = group_algebra("Z3", cyclic_group_table(3), cyclic_group_labels(3));
    auto s3 = group_algebra("S3", s3_table(), s3_labels());
    auto z2d = dual(*z2), z3d = dual(*z3), s3d = dual(*s3);
    auto h4 = sweedler_h4();
    auto z3c = group_algebra("Z3", cyclic_group_table(3), cyclic_group_labels(3), FieldSpec::cyclotomic(3));

    write(dir, "z2_group.json", write_presentation(with_r(z2, {{"trivial", trivial_r(*z2)}})));
    write(dir, "z3_group.json", write_presentation(with_r(z3, {{"trivial", trivial_r(*z3)}})));
    write(dir, "s3_group.json", write_presentation(with_r(s3, {{"trivial", trivial_r(*s3)}})));
    write(dir, "z2_dual.json", write_presentation(with_r(z2d, {{"trivial", trivial_r(*z2d)}})));
    write(dir, "z3_dual.json", write_presentation(with_r(z3d, {{"trivial", trivial_r(*z3d)}})));
    write(dir, "s3_dual.json", write_presentation(with_r(s3d)));
    write(dir, "sweedler_h4.json", write_presentation(with_r(h4, {{"R0", sweedler_r(*h4, Scalar(0))},
                                                                  {"R1", sweedler_r(*h4, Scalar(1))},
                                                                  {"R2", sweedler_r(*h4, Scalar(2))}})));
    fs::remove(dir / "h4.json");
    fs::create_symlink("sweedler_h4.json", dir / "h4.json");
    write(dir, "z3_cyclotomic.json", write_presentation(with_r(z3c, {{"Rzeta", cyclic_zeta_r(*z3c)}})));
    DrinfeldDouble dz2 = drinfeld_double(z2);
    write(dir, "double_z2.json", write_presentation(with_r(dz2.D, {{"R_D", dz2.qt->R()}})));
    DrinfeldDouble dh4 = drinfeld_double(h4);
    write(dir, "double_h4.json", write_presentation(with_r(dh4.D, {{"R_D", dh4.qt->R()}})));

    // Delta(g) = g (x) e
    std::vector<SparseVec> cop{z2->coproduct(0), SparseVec{{1 * 2 + 0, Scalar(1)}}};
    auto broken = HopfAlgebra::unchecked(z2->algebra(), cop, z2->counit(), {z2->antipode().column(0), z2->antipode().column(1)});
    write(fix, "bad_coproduct.json", write_presentation(with_r(broken)));

    std::string z2_text = write_presentation(with_r(z2));
    write(fix, "bad_rational.json", replace_once(z2_text, "\"counit\": {\n    \"e\": \"1\"", "\"counit\": {\n    \"e\": \"1/0\""));
    write(fix, "malformed.json", z2_text.substr(0, z2_text.size() / 2));
    write(fix, "unknown_label.json", replace_once(z2_text, "\"antipode\": {\n    \"e\"", "\"antipode\": {\n    \"h\""));

    // Nilpotent part with the signs of x (x) gx and gx (x) x exchanged.
    const auto two = h4->legs(2);
    auto b = [&](std::size_t i, std::size_t j) { return TensorElement::basis(two, {i, j}); };
    TensorElement bad_r = (b(0, 0) + b(0, 1) + b(1, 0) - b(1, 1)) * Scalar(1, 2) +
                          (b(2, 2) + b(2, 3) + b(3, 3) - b(3, 2)) * Scalar(1, 2);
    write(fix, "bad_r_matrix.json", write_presentation(with_r(h4, {{"R", bad_r}})));
  } catch (const std::exception& e) {
    std::cerr << "corpus_gen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
