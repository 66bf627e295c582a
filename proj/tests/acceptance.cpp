int acceptance_placeholder_main_replaced_later() { return 0; }
int main() { return 0; }
