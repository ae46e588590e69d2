#include <advlogic/dataset.hpp>
#include <advlogic/matrix.hpp>

int main() {
  using namespace advlogic;
  auto rows = reference_table();
  if (!validate_dataset(rows, matrix_Tprime(), 2).ok()) return 1;
  return check_tautology(peirce_law(), matrix_Tprime()).is_tautology() ? 1 : 0;
}
