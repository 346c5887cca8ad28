// placeholder main until the table layer lands
int main() { return 0; }
